"""Congruences of rational functions modulo factored polynomial moduli.

``A/B ≡ C/D (mod M)`` is read in lowest terms: the difference, once every
denominator factor that meets M has been cancelled, must have a numerator
divisible by M and a denominator coprime to M.  Denominators here are
products of binomials, which split into cyclotomic polynomials (or are
primitive of degree one in ``a``), so the cancellation is structural and
never needs a general gcd.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import BadParity, NotCoprime, NotDivisible, NotPrime, QscError
from .qkit import cyclotomic, cyclotomic_indices, is_prime, q_binom, q_int, q_pochhammer
from .report import ERROR, FAIL, PASS
from .ring import LaurentPoly, RatFun, poly_gcd_q
from .wz import (closed_form_aneg1, closed_form_full, closed_form_half, closed_form_param,
                 direct_sum, theorem1_term, theorem2_term, theorem3_term)

q = LaurentPoly.gen("q")
a = LaurentPoly.gen("a")
ONE = LaurentPoly.const(1)
HALF, FULL = "half", "full"


class Modulus:
    """A product of polynomial factors with multiplicities."""

    def __init__(self, factors: Iterable[tuple[LaurentPoly, int]], label: str = ""):
        self.factors = [(f, int(m)) for f, m in factors]
        for f, m in self.factors:
            if m < 1:
                raise ValueError("multiplicities must be positive")
            if f.is_zero or f.is_monomial:
                raise ValueError(f"modulus factor {f} is zero or a unit")
        self.label = label

    @cached_property
    def expansion(self) -> LaurentPoly:
        out = ONE
        for f, m in self.factors:
            out = out * f ** m
        return out

    def degree(self, var: str = "q") -> int:
        return self.expansion.span(var)

    def __repr__(self):
        return f"Modulus({self.label or [(str(f), m) for f, m in self.factors]})"


@dataclass
class CongruenceReport:
    claim: str
    verdict: str
    n: int | None = None
    variant: str | None = None
    modulus_degree: int = 0
    witness: LaurentPoly | None = None
    residue: LaurentPoly | None = None
    failed_factor: str | None = None
    coprimality: dict = field(default_factory=dict)
    detail: str = ""
    params: dict = field(default_factory=dict)
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self):
        return self.passed

    @property
    def witness_degree(self) -> int | None:
        if self.witness is None or self.witness.is_zero:
            return None if self.witness is None else 0
        return self.witness.span("q")

    def to_json(self) -> dict:
        return {"claim": self.claim, "n": self.n, "variant": self.variant, "verdict": self.verdict,
                "modulus_degree": self.modulus_degree, "witness_degree": self.witness_degree,
                "elapsed_ms": self.elapsed_ms}

    def witness_summary(self) -> dict:
        out = {"modulus_degree": self.modulus_degree, "witness_degree": self.witness_degree}
        if self.residue is not None:
            out["residue_terms"] = len(self.residue)
        if self.failed_factor:
            out["failed_factor"] = self.failed_factor
        if self.coprimality.get("cancelled"):
            out["cancelled"] = self.coprimality["cancelled"]
        if self.detail:
            out["detail"] = self.detail
        return out


def _q_content(f: LaurentPoly) -> LaurentPoly:
    """gcd of the coefficients of f viewed as a polynomial in a (monic, up to q-powers)."""
    if not f.involves("a"):
        return f
    parts: dict = {}
    for (eq, ea), c in f.items():
        parts.setdefault(ea, {})[(eq, 0)] = c
    g = LaurentPoly.zero()
    for terms in parts.values():
        g = poly_gcd_q(g, LaurentPoly(terms))
        if g == 1:
            break
    return g


def _denominator_primes(rf: RatFun):
    """Yield (label, prime polynomial, multiplicity, exact) for the denominator of rf."""
    cyc: Counter = Counter()
    others = []
    for (c, e), m in rf.den.atoms.items():
        univariate = not any(e[1:])
        if univariate and c in (1, -1):
            for d in cyclotomic_indices(c, e[0]):
                cyc[d] += m
        else:
            others.append(((c, e), m))
    for d in sorted(cyc):
        yield f"Phi_{d}", cyclotomic(d), cyc[d], True
    for atom, m in sorted(others, key=lambda t: (t[0][1], str(t[0][0]))):
        poly = rf.den.atom_poly(atom)
        # primitive and of degree one in a: irreducible
        exact = abs(atom[1][1]) == 1 if len(atom[1]) > 1 else False
        yield f"({poly})", poly, m, exact


def check_congruence(lhs: RatFun, rhs: RatFun, m: Modulus, claim: str = "") -> CongruenceReport:
    """Decide lhs ≡ rhs (mod m); raises NotCoprime if the reduced denominator meets m."""
    t0 = time.perf_counter()
    diff = lhs - rhs
    report = CongruenceReport(claim or "congruence", PASS, modulus_degree=m.degree("q"))
    num = diff.num
    if num.is_zero:
        report.witness = num
        report.coprimality = {"note": "difference vanishes identically"}
        report.elapsed_ms = _ms(t0)
        return report
    contents = [(f, _q_content(f)) for f, _ in m.factors]
    cancelled, coprime, structural = {}, [], []
    for label, prime, mult, exact in _denominator_primes(diff):
        if prime.involves("a"):
            # primitive in a, so it shares nothing with a factor free of a
            bivariate = [f for f, _ in contents if f.involves("a")]
            hits = [f for f in bivariate if prime.divides(f)]
            if not hits and bivariate and not exact:
                raise NotCoprime(f"cannot certify {label} coprime to {m}")
        else:
            hits = [f for f, content in contents if poly_gcd_q(prime, content) != 1]
        if not hits:
            (structural if prime.involves("a") else coprime).append(label)
            continue
        done = 0
        while done < mult:
            try:
                num = num.div_exact(prime)
            except NotDivisible:
                break
            done += 1
        cancelled[label] = done
        if done < mult:
            raise NotCoprime(f"{label} survives in the reduced denominator ({mult - done} of {mult}) "
                             f"and divides the modulus")
    report.coprimality = {"cancelled": cancelled, "coprime": coprime, "structural": structural}
    for f, mult in m.factors:
        for i in range(mult):
            try:
                num = num.div_exact(f)
            except NotDivisible as exc:
                report.verdict = FAIL
                report.failed_factor = f"({f})^{i + 1}"
                report.residue = _residue(num, f, exc)
                report.elapsed_ms = _ms(t0)
                return report
    report.witness = num
    report.elapsed_ms = _ms(t0)
    return report


def _residue(num: LaurentPoly, f: LaurentPoly, exc: NotDivisible) -> LaurentPoly | None:
    if not num.involves("a") and not f.involves("a"):
        return num.divmod_univariate(f, "q")[1]
    return exc.remainder


def _guarded(claim: str, n, variant, fn) -> CongruenceReport:
    t0 = time.perf_counter()
    try:
        rep = fn()
    except (NotCoprime, NotDivisible) as exc:
        rep = CongruenceReport(claim, ERROR, detail=f"{type(exc).__name__}: {exc}")
    rep.claim = claim
    rep.n = n
    rep.variant = variant
    rep.elapsed_ms = _ms(t0)
    return rep


def _odd(n: int):
    if n % 2 == 0:
        raise BadParity(f"n = {n} must be odd")
    if n < 3:
        raise ValueError(f"n = {n} must exceed 1")


def _upper(n: int, variant: str) -> int:
    if variant == HALF:
        return (n + 1) // 2
    if variant == FULL:
        return n - 1
    raise ValueError(f"variant must be 'half' or 'full', got {variant!r}")


def sub_q(p: LaurentPoly, power: int) -> LaurentPoly:
    return p.subs({"q": q ** power})


# theorems


def theorem1_modulus(n: int, extra_phi: int = 0) -> Modulus:
    return Modulus([(q_int(n), 4), (cyclotomic(n), 1 + extra_phi)], f"[{n}]^4 Phi_{n}(q)")


def theorem1_rhs(n: int) -> RatFun:
    return RatFun(-(1 + 3 * q + q ** 2) * q_int(n) ** 4)


def verify_theorem1(n: int, variant: str, modulus: Modulus | None = None) -> CongruenceReport:
    """Sum to (n+1)/2 or n-1 of the quartic summand ≡ -(1+3q+q^2)[n]^4 mod [n]^4 Phi_n(q)."""
    _odd(n)
    upper = _upper(n, variant)
    claim = f"theorem1 {variant} n={n}"

    def run():
        lhs = direct_sum(theorem1_term, upper)
        rep = check_congruence(lhs, theorem1_rhs(n), modulus or theorem1_modulus(n), claim)
        closed = closed_form_half(n) if variant == HALF else closed_form_full(n)
        if closed != lhs:
            rep.verdict = FAIL
            rep.detail = "direct sum and closed form disagree"
        else:
            rep.detail = "direct sum agrees with closed form"
        return rep

    return _guarded(claim, n, variant, run)


def theorem2_modulus(n: int) -> Modulus:
    return Modulus([(1 - a * q ** n, 1), (a - q ** n, 1), (q_int(n), 2)],
                   f"(1-aq^{n})(a-q^{n})[{n}]^2")


def verify_theorem2(n: int, variant: str, modulus: Modulus | None = None) -> CongruenceReport:
    """The a-parametric sum ≡ 0 mod [n]^2 (1 - a q^n)(a - q^n), with a symbolic."""
    _odd(n)
    upper = _upper(n, variant)
    claim = f"theorem2 {variant} n={n}"

    def run():
        lhs = direct_sum(theorem2_term, upper)
        rep = check_congruence(lhs, RatFun(LaurentPoly.zero()), modulus or theorem2_modulus(n), claim)
        if closed_form_param(upper) != lhs:
            rep.verdict = FAIL
            rep.detail = "direct sum and closed form disagree"
        else:
            rep.detail = "direct sum agrees with closed form; (a - q^n) taken up to the unit a"
        return rep

    return _guarded(claim, n, variant, run)


def theorem3_modulus(n: int) -> Modulus:
    return Modulus([(sub_q(q_int(n), 2), 2), (sub_q(cyclotomic(n), 2), 1)],
                   f"[{n}]_(q^2)^2 Phi_{n}(q^2)")


def theorem3_rhs(n: int, variant: str) -> RatFun:
    base = -(1 - q + q ** 2) * sub_q(q_int(n), 2) ** 2
    return RatFun(base * q ** n if variant == HALF else base)


def verify_theorem3(n: int, variant: str, modulus: Modulus | None = None) -> CongruenceReport:
    _odd(n)
    upper = _upper(n, variant)
    claim = f"theorem3 {variant} n={n}"

    def run():
        lhs = direct_sum(theorem3_term, upper)
        rep = check_congruence(lhs, theorem3_rhs(n, variant), modulus or theorem3_modulus(n), claim)
        if closed_form_aneg1(upper) != lhs:
            rep.verdict = FAIL
            rep.detail = "direct sum and closed form disagree"
        else:
            rep.detail = "direct sum agrees with closed form"
        return rep

    return _guarded(claim, n, variant, run)


def sharpness_probe_theorem1(n: int, variant: str = HALF) -> CongruenceReport:
    """Theorem 1 against the stronger modulus [n]^4 Phi_n(q)^2; a pass would be news."""
    rep = verify_theorem1(n, variant, theorem1_modulus(n, extra_phi=1))
    rep.claim = f"theorem1 {variant} n={n} sharpness probe mod [n]^4 Phi_n^2"
    return rep


# corollaries at prime powers


def prime_power_precheck(p: int, r: int, base_power: int = 1) -> bool:
    """Phi_{p^r}(q^b) == [p] evaluated at q^(b p^(r-1))."""
    n = p ** r
    return sub_q(cyclotomic(n), base_power) == sub_q(q_int(p), base_power * p ** (r - 1))


def verify_corollary_q(p: int, r: int, family: str, variant: str) -> CongruenceReport:
    if not is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    if r < 1:
        raise ValueError("r must be positive")
    n = p ** r
    upper = _upper(n, variant)
    claim = f"{family} {variant} p={p} r={r}"

    def run():
        if family == "cor41":
            pre = prime_power_precheck(p, r, 1)
            lhs = direct_sum(theorem1_term, upper)
            rhs = theorem1_rhs(n)
            mod = Modulus([(q_int(n), 4), (sub_q(q_int(p), p ** (r - 1)), 1)],
                          f"[{n}]^4 [{p}]_(q^{p ** (r - 1)})")
        elif family == "cor43":
            pre = prime_power_precheck(p, r, 2)
            lhs = direct_sum(theorem3_term, upper)
            rhs = theorem3_rhs(n, variant)
            mod = Modulus([(sub_q(q_int(n), 2), 2), (sub_q(q_int(p), 2 * p ** (r - 1)), 1)],
                          f"[{n}]_(q^2)^2 [{p}]_(q^{2 * p ** (r - 1)})")
        else:
            raise ValueError(f"unknown family {family!r}")
        rep = check_congruence(lhs, rhs, mod, claim)
        rep.params = {"p": p, "r": r, "family": family, "precheck": pre}
        if not pre:
            rep.verdict = FAIL
            rep.detail = "cyclotomic prime-power precheck failed"
        return rep

    return _guarded(claim, n, variant, run)


# auxiliary congruences and divisibility facts


def _gcd_report(claim: str, x: LaurentPoly, y: LaurentPoly, n: int) -> CongruenceReport:
    t0 = time.perf_counter()
    g = poly_gcd_q(x, y)
    return CongruenceReport(claim, PASS if g == 1 else FAIL, n=n, witness=g, elapsed_ms=_ms(t0))


def _div_report(claim: str, p: LaurentPoly, d: LaurentPoly, n: int) -> CongruenceReport:
    t0 = time.perf_counter()
    try:
        quo = p.div_exact(d)
    except NotDivisible as exc:
        return CongruenceReport(claim, FAIL, n=n, residue=p.divmod_univariate(d)[1],
                                detail=str(exc), elapsed_ms=_ms(t0))
    return CongruenceReport(claim, PASS, n=n, modulus_degree=d.span("q"), witness=quo, elapsed_ms=_ms(t0))


def _eq_report(claim: str, x: LaurentPoly, y: LaurentPoly, n: int) -> CongruenceReport:
    return CongruenceReport(claim, PASS if x == y else FAIL, n=n)


def _cong(claim, lhs: LaurentPoly, rhs: LaurentPoly, mod: Modulus, n: int) -> CongruenceReport:
    return _guarded(claim, n, None, lambda: check_congruence(RatFun(lhs), RatFun(rhs), mod, claim))


def verify_lemma_congruences(m: int) -> list[CongruenceReport]:
    """The four auxiliary congruences mod Phi_m(q) and the coprimality facts behind them."""
    _odd(m)
    h = (m - 1) // 2
    phi = Modulus([(cyclotomic(m), 1)], f"Phi_{m}(q)")
    neg_half = q_pochhammer(-1, 1, 0, 1, h).expand()
    out = [
        _cong(f"(-q;q)_{h}^2 ≡ q^{(m * m - 1) // 8} mod Phi_{m}",
              neg_half ** 2, q ** ((m * m - 1) // 8), phi, m),
        _cong(f"[{m - 1} choose {h}] ≡ (-1)^{h} q^{(1 - m * m) // 8} mod Phi_{m}",
              q_binom(m - 1, h), LaurentPoly.monomial((-1) ** h, ((1 - m * m) // 8, 0)), phi, m),
        _cong(f"(-q;q)_{m - 1} ≡ 1 mod Phi_{m}",
              q_pochhammer(-1, 1, 0, 1, m - 1).expand(), ONE, phi, m),
    ]
    central = q_binom(2 * m - 2, m - 1)
    out.append(_eq_report(f"[{m - 1}] [{2 * m - 2} choose {m - 1}] == [{m}] [{2 * m - 2} choose {m - 2}]",
                          q_int(m - 1) * central, q_int(m) * q_binom(2 * m - 2, m - 2), m))
    try:
        reduced = central.div_exact(q_int(m))
    except NotDivisible:
        out.append(CongruenceReport(f"[{m}] divides [{2 * m - 2} choose {m - 1}]", FAIL, n=m))
    else:
        e = 2 - (m - 1) * (m - 2) // 2
        out.append(_cong(f"[{2 * m - 2} choose {m - 1}]/[{m}] ≡ (-1)^{m - 2} q^{e} mod Phi_{m}",
                         reduced, LaurentPoly.monomial((-1) ** (m - 2), (e, 0)), phi, m))
    out.append(_gcd_report(f"gcd([{m}], (-q;q)_{h}) = 1", q_int(m), neg_half, m))
    bad = [k for k in range(2 * m + 1) if poly_gcd_q(q_int(m), 1 + q ** k) != 1]
    out.append(CongruenceReport(f"gcd([{m}], 1+q^k) = 1 for 0 <= k <= {2 * m}",
                                FAIL if bad else PASS, n=m, detail=f"failing k: {bad}" if bad else ""))
    return out


def verify_divisibility_facts(n: int) -> list[CongruenceReport]:
    _odd(n)
    h = (n - 1) // 2
    qn = q_int(n)
    c_half = q_binom(n, h)
    c_next = q_binom(n + 1, h + 1)
    return [
        _div_report(f"[{n}] | [{n} choose {h}]", c_half, qn, n),
        _div_report(f"[{n}] | [{n + 1} choose {h + 1}]", c_next, qn, n),
        _div_report(f"[{n}] | [{2 * n - 2} choose {n - 1}]", q_binom(2 * n - 2, n - 1), qn, n),
        _eq_report(f"[{n + 1} choose {h + 1}] == (1+q^{h + 1}) [{n} choose {h}]",
                   c_next, (1 + q ** (h + 1)) * c_half, n),
        _eq_report(f"[{h + 1}] [{n} choose {h}] == [{n}] [{n - 1} choose {h}]",
                   q_int(h + 1) * c_half, qn * q_binom(n - 1, h), n),
    ]


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


__all__ = [
    "Modulus", "CongruenceReport", "check_congruence", "verify_theorem1", "verify_theorem2",
    "verify_theorem3", "verify_corollary_q", "verify_lemma_congruences", "verify_divisibility_facts",
    "sharpness_probe_theorem1", "prime_power_precheck", "theorem1_modulus", "theorem2_modulus",
    "theorem3_modulus", "HALF", "FULL", "QscError",
]
