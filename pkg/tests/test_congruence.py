import pytest

from qsc import congruence as cg
from qsc.errors import BadParity, NotCoprime, NotPrime
from qsc.qkit import cyclotomic, q_binom, q_int
from qsc.ring import FactorList, LaurentPoly, RatFun

q = LaurentPoly.gen("q")
one = LaurentPoly.const(1)


def test_identical_sides_zero_witness():
    x = RatFun(1 + q, FactorList({(1, (2, 0)): 1}))
    rep = cg.check_congruence(x, x, cg.Modulus([(cyclotomic(5), 1)]))
    assert rep and rep.witness.is_zero


def test_bracket_divisible_by_phi9():
    rep = cg.check_congruence(RatFun(q_int(9)), RatFun(LaurentPoly.zero()), cg.Modulus([(cyclotomic(9), 1)]))
    assert rep
    assert rep.witness == q_int(9).div_exact(cyclotomic(9))


def test_not_coprime_raised():
    lhs = RatFun(one, FactorList({(1, (1, 0)): 1}))
    with pytest.raises(NotCoprime):
        cg.check_congruence(lhs, RatFun(LaurentPoly.zero()), cg.Modulus([(cyclotomic(1), 1)]))


def test_failure_reports_residue():
    rep = cg.check_congruence(RatFun(q_int(9) + 1), RatFun(LaurentPoly.zero()),
                              cg.Modulus([(cyclotomic(9), 1)]))
    assert not rep
    assert rep.failed_factor.endswith("^1")
    assert rep.residue == one


def test_modulus_rejects_units():
    with pytest.raises(ValueError):
        cg.Modulus([(q ** 3, 1)])


def test_lemmas_m3_m9_m15():
    for m in (3, 9, 15):
        reps = cg.verify_lemma_congruences(m)
        assert all(reps), [r.claim for r in reps if not r]
    neg4 = one
    for j in range(1, 5):
        neg4 = neg4 * (1 + q ** j)
    assert cg.check_congruence(RatFun(neg4 ** 2), RatFun(q ** 10), cg.Modulus([(cyclotomic(9), 1)]))


def test_divisibility_examples():
    assert q_binom(4, 2).div_exact(q_int(3)) == 1 + q ** 2
    for n in (3, 5, 9):
        assert all(cg.verify_divisibility_facts(n))


@pytest.mark.parametrize("n", [3, 5, 9, 15])
@pytest.mark.parametrize("variant", ["half", "full"])
def test_theorem1(n, variant):
    rep = cg.verify_theorem1(n, variant)
    assert rep, rep.detail


@pytest.mark.parametrize("variant", ["half", "full"])
def test_theorem2(variant):
    assert cg.verify_theorem2(3, variant)
    assert cg.verify_theorem2(9, variant)


@pytest.mark.parametrize("n", [3, 9])
@pytest.mark.parametrize("variant", ["half", "full"])
def test_theorem3(n, variant):
    assert cg.verify_theorem3(n, variant)


def test_theorem3_qn_factor_matters():
    # swapping the right-hand sides of the two variants breaks both
    for variant, other in (("half", "full"), ("full", "half")):
        lhs = cg.direct_sum(cg.theorem3_term, cg._upper(5, variant))
        rep = cg.check_congruence(lhs, cg.theorem3_rhs(5, other), cg.theorem3_modulus(5))
        assert not rep


def test_sharpness_probe_fails():
    rep = cg.sharpness_probe_theorem1(3)
    assert rep.verdict == "fail"
    assert rep.failed_factor.endswith("^2")


def test_theorem_input_validation():
    with pytest.raises(BadParity):
        cg.verify_theorem1(4, "half")
    with pytest.raises(ValueError):
        cg.verify_theorem1(1, "half")
    with pytest.raises(ValueError):
        cg.verify_theorem1(3, "middle")


def test_corollary_q_examples():
    assert cg.prime_power_precheck(3, 2)
    assert cyclotomic(9) == q_int(3).subs({"q": q ** 3})
    rep = cg.verify_corollary_q(3, 1, "cor41", "half")
    assert rep and rep.params["precheck"]
    assert cg.verify_corollary_q(3, 2, "cor43", "full")
    with pytest.raises(NotPrime):
        cg.verify_corollary_q(9, 1, "cor41", "half")


def test_report_json_shape():
    js = cg.verify_theorem1(3, "half").to_json()
    assert set(js) == {"claim", "n", "variant", "verdict", "modulus_degree", "witness_degree", "elapsed_ms"}
    assert js["modulus_degree"] == 4 * 2 + 2
