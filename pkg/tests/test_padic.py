import math
from fractions import Fraction
from math import comb

import pytest

from qsc.errors import NotPrime
from qsc.padic import PadicClaim, corollary_sum, padic_val, verify_padic


def test_padic_val_examples():
    assert padic_val(Fraction(567, 64), 3) == 4
    assert padic_val(0, 5) == math.inf
    assert padic_val(Fraction(1, 9), 3) == -2


def test_anchor_sums():
    assert corollary_sum(PadicClaim(3, 1, "cor44", "half")) == Fraction(55, 64)
    assert corollary_sum(PadicClaim(3, 1, "cor42", "half")) == Fraction(775, 4096)


def test_first_term():
    # upper limit 0 is not reachable for odd p, so check the k = 0 term by hand
    assert Fraction(3 * comb(0, 0) ** 4, 16) == Fraction(3, 16)
    assert corollary_sum(PadicClaim(3, 1, "cor42", "half")) - Fraction(3, 16) == Fraction(7, 4096)


def test_anchor_verdicts():
    rep = verify_padic(PadicClaim(3, 1, "cor44", "half"))
    assert rep and rep.valuation_found == 4
    rep = verify_padic(PadicClaim(3, 1, "cor42", "half"))
    assert rep and rep.valuation_found >= 5
    assert Fraction(775, 4096) - (1 - 405) == Fraction(1655559, 4096)
    assert 1655559 == 243 * 6813


def test_tightened_modulus_reports_stronger_valuation():
    # 6813 = 9 * 757, so v_3 is 7 and even 4r+2 = 6 still passes
    rep = verify_padic(PadicClaim(3, 1, "cor42", "half", modulus_exponent=6))
    assert rep.passed and rep.valuation_found == 7
    assert not verify_padic(PadicClaim(3, 1, "cor42", "half", modulus_exponent=8))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("r", [1, 2])
def test_all_prime_powers(p, r):
    for fam in ("cor42", "cor44"):
        for var in ("half", "full"):
            rep = verify_padic(PadicClaim(p, r, fam, var))
            assert rep, rep.to_json()


def test_claim_validation():
    with pytest.raises(NotPrime):
        PadicClaim(9, 1, "cor42", "half")
    with pytest.raises(NotPrime):
        PadicClaim(2, 1, "cor42", "half")
    with pytest.raises(ValueError):
        PadicClaim(3, 0, "cor42", "half")


def test_summand_matches_direct_binomials():
    claim = PadicClaim(5, 1, "cor44", "full")
    direct = sum(Fraction((4 * k + 3) * comb(2 * k, k) ** 2, 4 * (k + 1) ** 2 * 16 ** k)
                 for k in range(claim.upper + 1))
    assert corollary_sum(claim) == direct


def test_json_fields():
    js = verify_padic(PadicClaim(5, 1, "cor44", "full")).to_json()
    assert set(js) == {"p", "r", "family", "variant", "verdict", "valuation_found",
                       "valuation_required", "elapsed_ms"}
