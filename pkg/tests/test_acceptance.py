"""Acceptance run: one PASS/FAIL line per criterion, printed in the terminal summary."""

import time
from fractions import Fraction

from qsc import congruence as cg
from qsc import wz
from qsc.padic import PadicClaim, corollary_sum, padic_val, verify_padic
from qsc.ring import LaurentPoly, RatFun

q = LaurentPoly.gen("q")
ODD_25 = range(3, 26, 2)
ODD_15 = range(3, 16, 2)


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_1_symbolic_certificate(criterion):
    ok, dt = timed(wz.check_ratio_identity_symbolic)
    good = criterion(1, ok and dt < 1.0, f"symbolic identity={ok} in {dt:.3f}s (limit 1s)")
    assert good


def test_2_wz_grids(criterion):
    def both():
        return wz.check_qwz_grid(12, 12), wz.check_classical_relation(12, 12)
    (qrep, crep), dt = timed(both)
    ok = qrep.passed and crep.passed and dt < 10.0
    note = (f"q-WZ {qrep.checked} points, classical {crep.checked} points "
            f"(k >= 1), {dt:.2f}s (limit 10s)")
    assert criterion(2, ok, note)


def test_3_closed_forms(criterion):
    failures = []
    for m in ODD_15:
        for chk in (wz.check_closed_form_half(m), wz.check_closed_form_full(m)):
            if not chk:
                failures.append((chk.name, m, chk.results))
    for N in range(9):
        for chk in (wz.check_closed_form_param(N), wz.check_closed_form_aneg1(N)):
            if not chk:
                failures.append((chk.name, N, chk.results))
    assert criterion(3, not failures, f"m in 3..15 odd, N in 0..8; failures={failures}")


def test_4_theorem1(criterion):
    reps, dt = timed(lambda: [cg.verify_theorem1(n, v) for n in ODD_25 for v in ("half", "full")])
    bad = [r.claim for r in reps if not r]
    ok = not bad and dt < 120
    assert criterion(4, ok, f"{len(reps)} congruences, {dt:.1f}s (limit 120s); failures={bad}")


def test_5_theorem2(criterion):
    reps = [cg.verify_theorem2(n, v) for n in ODD_15 for v in ("half", "full")]
    bad = [r.claim for r in reps if not r]
    assert criterion(5, not bad, f"{len(reps)} congruences with symbolic a; failures={bad}")


def test_6_theorem3(criterion):
    reps = [cg.verify_theorem3(n, v) for n in ODD_25 for v in ("half", "full")]
    bad = [r.claim for r in reps if not r]
    # the extra q^n on the half variant is load-bearing: without it the congruence breaks.
    # n = 3 is skipped since Phi_3(q^2) = Phi_3 Phi_6 already divides (q^3 - 1)(1 - q + q^2)
    swapped = [n for n in (5, 7, 9)
               if cg.check_congruence(cg.direct_sum(cg.theorem3_term, (n + 1) // 2),
                                      cg.theorem3_rhs(n, "full"), cg.theorem3_modulus(n))]
    ok = not bad and not swapped
    assert criterion(6, ok, f"{len(reps)} congruences; failures={bad}; q^n dropped still passing={swapped}")


def test_7_lemmas_and_divisibility(criterion):
    bad = []
    for m in ODD_25:
        bad += [r.claim for r in cg.verify_lemma_congruences(m) if not r]
        bad += [r.claim for r in cg.verify_divisibility_facts(m) if not r]
    assert criterion(7, not bad, f"m in 3..25 odd; failures={bad}")


def test_8_q_corollaries(criterion):
    pairs = [(3, 1), (5, 1), (7, 1), (3, 2)]
    reps = [cg.verify_corollary_q(p, r, fam, v) for p, r in pairs
            for fam in ("cor41", "cor43") for v in ("half", "full")]
    pre = all(cg.prime_power_precheck(p, r) for p, r in pairs)
    bad = [r.claim for r in reps if not r]
    assert criterion(8, pre and not bad, f"{len(reps)} congruences, precheck={pre}; failures={bad}")


def test_9_padic(criterion):
    def run():
        return [verify_padic(PadicClaim(p, r, fam, v)) for p in (3, 5, 7, 11, 13) for r in (1, 2)
                for fam in ("cor42", "cor44") for v in ("half", "full")]
    reps, dt = timed(run)
    bad = [r.to_json() for r in reps if not r]
    s42 = corollary_sum(PadicClaim(3, 1, "cor42", "half"))
    s44 = corollary_sum(PadicClaim(3, 1, "cor44", "half"))
    anchors = (s42 == Fraction(775, 4096) and s44 == Fraction(55, 64)
               and padic_val(s42 - (1 - 5 * 3 ** 4), 3) >= 5 and padic_val(s44 - (1 - 9), 3) >= 3)
    ok = not bad and anchors and dt < 60
    assert criterion(9, ok, f"{len(reps)} claims, anchors={anchors}, {dt:.2f}s (limit 60s); failures={bad}")


class _ShiftedTarget(PadicClaim):
    # 1 - 5 p^(4r) with the exponent lowered by one
    @property
    def target(self):
        return Fraction(1 - 5 * self.p ** (4 * self.r - 1))


def test_10_mutation_sensitivity(criterion):
    def F_mut(n, k):
        return wz.q_F(n, k) * RatFun(q)  # q-exponent of F raised by one

    def G_mut(n, k):
        return wz.q_G(n, k) * RatFun(q)  # q-exponent of G raised by one

    probes = {
        "F exponent": not wz.check_qwz_grid(12, 12, F=F_mut),
        "G exponent": not wz.check_qwz_grid(12, 12, G=G_mut),
        "symbolic constant": not wz.check_ratio_identity_symbolic(constant_term=1),
        "closed form exponent": all(wz.closed_form_half(m) * RatFun(q) != wz.direct_sum(wz.theorem1_term, (m + 1) // 2)
                                    for m in (3, 5, 7)),
        "modulus exponent": all(cg.sharpness_probe_theorem1(n).verdict == "fail" for n in (3, 5, 7)),
        "theorem3 q^n factor": not cg.check_congruence(cg.direct_sum(cg.theorem3_term, 3),
                                                       cg.theorem3_rhs(5, "full"), cg.theorem3_modulus(5)),
        "padic target": not verify_padic(_ShiftedTarget(3, 1, "cor42", "half")),
    }
    missed = [k for k, hit in probes.items() if not hit]
    ok = len(probes) >= 5 and not missed
    assert criterion(10, ok, f"{len(probes) - len(missed)}/{len(probes)} mutations detected; missed={missed}")
