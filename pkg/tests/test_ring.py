from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qsc.qkit import cyclotomic, q_int
from qsc.ring import (FactorList, LaurentPoly, NotDivisible, NotUnivariate, PoleHit, RatFun,
                      lp_arith, lp_div_exact, poly_gcd_q, rf_combine, rf_specialize)
from qsc.wz import closed_form_half, theorem1_term, theorem2_term, theorem3_term

q = LaurentPoly.gen("q")
a = LaurentPoly.gen("a")
one = LaurentPoly.const(1)


def test_arith_examples():
    assert lp_arith("add", q + 1, LaurentPoly.const(-1)) == q
    assert lp_arith("mul", 1 - q ** -1, q) == q - 1
    assert lp_arith("pow", 1 + q, 2) == 1 + 2 * q + q ** 2
    with pytest.raises(ValueError):
        lp_arith("pow", q, -1)


def test_div_exact_examples():
    assert lp_div_exact(q ** 2 - 1, q - 1) == q + 1
    assert lp_div_exact(1 - a ** 2 * q ** 2, 1 - a * q) == 1 + a * q
    with pytest.raises(NotDivisible):
        lp_div_exact(q ** 3 - 1, q + 1)


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        lp_div_exact(q, LaurentPoly.zero())


def test_laurent_division_by_monomial():
    assert lp_div_exact(q ** -2 + q, q ** 3) == q ** -5 + q ** -2


def test_gcd_examples():
    assert poly_gcd_q(q ** 2 - 1, q ** 3 - 1) == q - 1
    assert poly_gcd_q(cyclotomic(3), 1 + q) == one
    neg = one
    for j in range(1, 5):
        neg = neg * (1 + q ** j)
    assert poly_gcd_q(q_int(9), neg) == one
    with pytest.raises(NotUnivariate):
        poly_gcd_q(q + a, q)


def test_gcd_is_monic_up_to_q_power():
    g = poly_gcd_q(q ** 3 * (2 * q - 2), q ** -1 * (q ** 2 - 1))
    assert g == q - 1


def test_to_str_roundtrip():
    p = -(q ** -1) + 2 * a + Fraction(1, 3) * q ** 2 * a ** -2
    assert LaurentPoly.parse(p.to_str()) == p
    assert (-(q ** -1) + 2 * a).to_str() == "-1*q^-1 + 2*q^0*a^1"


def test_factorlist_expand_and_cancel():
    fl = FactorList({(1, (1, 0)): 2, (-1, (2, 0)): 1})
    assert fl.expand() == (1 - q) ** 2 * (1 + q ** 2)
    r = RatFun.from_factors(fl, FactorList({(1, (1, 0)): 1}))
    assert r == RatFun((1 - q) * (1 + q ** 2))


def test_rf_combine_examples():
    d = FactorList({(1, (1, 0)): 1})
    x, y = RatFun(one, d), RatFun(q, d)
    assert rf_combine([x, y]) == RatFun(1 + q, d)
    z = RatFun(q + a, FactorList({(1, (1, 1)): 2}))
    assert rf_combine([z, -z]).is_zero
    with pytest.raises(ValueError):
        rf_combine([])


def test_rf_combine_matches_closed_form_m3():
    assert rf_combine([theorem1_term(k) for k in range(3)]) == closed_form_half(3)


def test_rf_specialize_examples():
    f = RatFun(1 - a * q, FactorList({(1, (1, 0)): 1}))
    assert rf_specialize(f, "a", 1) == RatFun(one)
    for k in range(7):
        assert rf_specialize(theorem2_term(k), "a", -1) == theorem3_term(k)
    g = RatFun(one, FactorList({(1, (1, 1)): 1}))
    with pytest.raises(PoleHit):
        rf_specialize(g, "a", q ** -1)


def test_ratfun_division_and_power():
    f = RatFun(1 + q, FactorList({(1, (1, 0)): 1}))
    assert (f * f.inverse()) == RatFun(one)
    assert f ** 2 == f * f
    assert f / f == RatFun(one)


# property tests

exps = st.tuples(st.integers(-3, 3), st.integers(-2, 2))
coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-5, max_value=5, max_denominator=4))
polys = st.dictionaries(exps, coeffs, max_size=5).map(LaurentPoly)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == LaurentPoly.zero()


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_div_exact_inverts_mul(x, d):
    if d.is_zero:
        return
    assert (x * d).div_exact(d) == x


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_evaluation_homomorphism(x, y):
    pt = {"q": Fraction(3, 5), "a": Fraction(-2, 7)}
    assert (x * y).evaluate(pt) == x.evaluate(pt) * y.evaluate(pt)
    assert (x - y).evaluate(pt) == x.evaluate(pt) - y.evaluate(pt)


upolys = st.lists(st.integers(-4, 4), min_size=1, max_size=6).map(
    lambda cs: LaurentPoly.from_dense(0, cs))


@settings(max_examples=50, deadline=None)
@given(upolys, upolys, upolys)
def test_gcd_divides_both(x, y, c):
    if x.is_zero or y.is_zero or c.is_zero:
        return
    g = poly_gcd_q(x * c, y * c)
    assert g.divides(x * c) and g.divides(y * c)
    if not c.is_monomial:
        assert poly_gcd_q(g, c) != one or c.is_constant


atoms = st.tuples(st.sampled_from([1, -1, 2]), st.integers(1, 3), st.integers(0, 1))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(polys, st.lists(atoms, max_size=3)), min_size=1, max_size=4))
def test_rf_combine_against_pointwise_fractions(parts):
    # independent oracle: evaluate every term as a Fraction and add
    pt = {"q": Fraction(3, 7), "a": Fraction(5, 11)}
    terms, expected = [], Fraction(0)
    for num, ats in parts:
        den = FactorList.one()
        for c, eq, ea in ats:
            den = den * FactorList({(c, (eq, ea)): 1})
        dv = Fraction(1)
        for c, eq, ea in ats:
            dv *= 1 - c * pt["q"] ** eq * pt["a"] ** ea
        terms.append(RatFun(num, den))
        expected += num.evaluate(pt) / dv
    assert rf_combine(terms).evaluate(pt) == expected
