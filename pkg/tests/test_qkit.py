import pytest

from qsc.qkit import (CyclotomicCache, cyclotomic, cyclotomic_indices, divisors, is_prime,
                      q_binom, q_binom_base, q_int, q_int_rf, q_pochhammer, totient)
from qsc.ring import LaurentPoly, RatFun

q = LaurentPoly.gen("q")
a = LaurentPoly.gen("a")
one = LaurentPoly.const(1)


def test_q_int_examples():
    assert q_int(3) == 1 + q + q ** 2
    assert q_int(0) == LaurentPoly.zero()
    assert q_int(-1) == -(q ** -1)
    assert q_int_rf(5) == RatFun(q_int(5))


@pytest.mark.parametrize("m,n", [(2, 3), (5, -2), (-3, -4), (7, 0)])
def test_q_int_additive(m, n):
    assert q_int(m + n) == q_int(m) + q ** m * q_int(n)


def test_pochhammer_examples():
    assert q_pochhammer(1, -1, 0, 2, 2).expand() == (1 - q ** -1) * (1 - q)
    assert q_pochhammer(1, 5, 1, 1, 0).expand() == one
    assert q_pochhammer(1, -1, 1, 2, 1).expand() == 1 - a * q ** -1


def test_pochhammer_quotient():
    # (x;q)_{n+m} / (x;q)_n = (xq^n;q)_m
    for n in range(4):
        for m in range(4):
            lhs = RatFun.from_factors(q_pochhammer(1, 1, 1, 1, n + m), q_pochhammer(1, 1, 1, 1, n))
            assert lhs == RatFun(q_pochhammer(1, 1 + n, 1, 1, m).expand())


def test_q_binom_examples():
    assert q_binom(2, 1) == 1 + q
    assert q_binom(4, 2) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert q_binom(3, 5) == LaurentPoly.zero()
    assert q_binom(3, -1) == LaurentPoly.zero()


@pytest.mark.parametrize("n", range(0, 11))
def test_q_binom_properties(n):
    from math import comb
    for k in range(n + 1):
        b = q_binom(n, k)
        assert b == q_binom(n, n - k)
        assert b.evaluate({"q": 1}) == comb(n, k)
        if 0 < k < n:
            assert b == q_binom(n - 1, k - 1) + q ** k * q_binom(n - 1, k)


def test_q_binom_base_substitutes():
    assert q_binom_base(4, 2, 3) == q_binom(4, 2).subs({"q": q ** 3})


def test_cyclotomic_examples():
    assert cyclotomic(1) == q - 1
    assert cyclotomic(6) == q ** 2 - q + 1
    assert cyclotomic(9) == q ** 6 + q ** 3 + 1


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_product_and_degree(n):
    prod = one
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == q ** n - 1
    assert cyclotomic(n).degree("q") == totient(n)


def test_cyclotomic_indices():
    assert cyclotomic_indices(1, 6) == [1, 2, 3, 6]
    # 1 + q^3 = Phi_2 Phi_6
    assert sorted(cyclotomic_indices(-1, 3)) == [2, 6]


def test_number_theory():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert totient(36) == 12
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_cache_persists(tmp_path):
    c = CyclotomicCache(tmp_path)
    phi = c.get(15)
    assert (tmp_path / "cyclotomic.json").exists()
    fresh = CyclotomicCache(tmp_path)
    assert 15 in fresh
    assert fresh.get(15) == phi


def test_cache_default_without_dir():
    c = CyclotomicCache()
    assert c.get(10) == q ** 4 - q ** 3 + q ** 2 - q + 1
