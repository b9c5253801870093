"""The WZ pair behind the degree-five q-supercongruence, and its closed forms.

Two tiers of checking live here.  The pointwise tier builds F(n,k), G(n,k)
as exact rational functions of q for concrete integers and tests the
telescoping relation cell by cell.  The symbolic tier works in a frame with
three variables (q, u, v), u standing for q^(2k) and v for q^(2n): ratios
of the hypergeometric terms are derived there from the defining products,
so the relation is checked for all n, k at once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .errors import BadParity, UndefinedPochhammer
from .qkit import q_binom, q_int, q_int_rf, q_pochhammer
from .report import FAIL, PASS, Report
from .ring import FactorList, LaurentPoly, RatFun, rf_combine

q = LaurentPoly.gen("q")
a = LaurentPoly.gen("a")
ONE = LaurentPoly.const(1)
ONE_MINUS_Q = FactorList({(1, (1, 0)): 1})


# classical pair


def rising(x: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for j in range(m):
        out *= x + j
    return out


def _inv_fact(m: int) -> Fraction:
    # 1/(1)_m with 1/(1)_m = 0 for negative m
    return Fraction(0) if m < 0 else Fraction(1, factorial(m))


HALF = Fraction(-1, 2)


def classical_f(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise UndefinedPochhammer(f"f({n},{k}) is only defined for n, k >= 0")
    if n - k < 0:
        return Fraction(0)
    return ((-1) ** k * (4 * n - 1) * rising(HALF, n) ** 3 * rising(HALF, n + k)
            * _inv_fact(n) ** 3 * _inv_fact(n - k) / rising(HALF, k) ** 2)


def classical_g(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise UndefinedPochhammer(f"g({n},{k}) is only defined for n, k >= 0")
    if n - 1 < 0 or n - k < 0:
        return Fraction(0)
    return ((-1) ** (k - 1) * 4 * rising(HALF, n) ** 3 * rising(HALF, n + k - 1)
            * _inv_fact(n - 1) ** 3 * _inv_fact(n - k) / rising(HALF, k) ** 2)


def check_classical_relation(n_max: int, k_max: int, f: Callable = classical_f,
                             g: Callable = classical_g) -> Report:
    """(2k-3) f(n,k-1) - (2k-4) f(n,k) = g(n+1,k) - g(n,k) on 0<=n<=n_max, 1<=k<=k_max."""
    if n_max < 1 or k_max < 1:
        raise ValueError("bounds must be at least 1")
    t0 = time.perf_counter()
    checked = 0
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            lhs = (2 * k - 3) * f(n, k - 1) - (2 * k - 4) * f(n, k)
            rhs = g(n + 1, k) - g(n, k)
            checked += 1
            if lhs != rhs:
                return Report("classical WZ relation", FAIL, {"n_max": n_max, "k_max": k_max},
                              checked, {"n": n, "k": k}, f"{lhs} != {rhs}", _ms(t0))
    return Report("classical WZ relation", PASS, {"n_max": n_max, "k_max": k_max}, checked,
                  elapsed_ms=_ms(t0))


def classical_limit_terms(k: int) -> tuple[Fraction, Fraction]:
    """Index-shifted q -> 1 limits of the quartic and quadratic summands at k+1.

    Returns ((4k+3) ((-1/2)_{k+1}/(k+1)!)^4, (4k+3) ((-1/2)_{k+1}/(k+1)!)^2).
    """
    r = rising(HALF, k + 1) / factorial(k + 1)
    return (4 * k + 3) * r ** 4, (4 * k + 3) * r ** 2


# q-analogue pair


def _A(m: int) -> FactorList:
    return q_pochhammer(1, -1, 0, 2, m)


def _B(m: int) -> FactorList:
    return q_pochhammer(1, 2, 0, 2, m)


def _bracket_factors(m: int) -> tuple[FactorList, FactorList]:
    # [m] = (1 - q^m)/(1 - q), for m != 0
    return FactorList({(1, (m, 0)): 1}), ONE_MINUS_Q


def _check_domain(n: int, k: int, name: str):
    if n < 0 or k < 0:
        raise IndexError(f"{name}({n},{k}) outside n >= 0, k >= 0")


def q_F(n: int, k: int) -> RatFun:
    _check_domain(n, k, "F")
    if n - k < 0:
        return RatFun(LaurentPoly.zero())
    sign = -1 if k % 2 else 1
    unit = FactorList.unit(sign, ((k - 2) * (k - 2 * n + 1), 0))
    bnum, bden = _bracket_factors(4 * n - 1)
    num = unit * bnum * _A(n) ** 3 * _A(n + k)
    den = bden * _B(n) ** 3 * _B(n - k) * _A(k) ** 2
    return RatFun.from_factors(num, den)


def q_G(n: int, k: int) -> RatFun:
    _check_domain(n, k, "G")
    if n - 1 < 0 or n - k < 0:
        return RatFun(LaurentPoly.zero())
    sign = 1 if k % 2 else -1
    unit = FactorList.unit(sign, ((k - 2) * (k - 2 * n + 3), 0))
    num = unit * _A(n) ** 3 * _A(n + k - 1)
    den = ONE_MINUS_Q ** 2 * _B(n - 1) ** 3 * _B(n - k) * _A(k) ** 2
    return RatFun.from_factors(num, den)


def check_qwz_relation(n: int, k: int, F: Callable = q_F, G: Callable = q_G) -> bool:
    """[2k-3] F(n,k-1) - [2k-4] F(n,k) == G(n+1,k) - G(n,k) as rational functions."""
    lhs = F(n, k - 1) * q_int(2 * k - 3) - F(n, k) * q_int(2 * k - 4)
    rhs = G(n + 1, k) - G(n, k)
    return lhs == rhs


def check_qwz_grid(n_max: int, k_max: int, F: Callable = q_F, G: Callable = q_G) -> Report:
    t0 = time.perf_counter()
    checked = 0
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            checked += 1
            if not check_qwz_relation(n, k, F, G):
                return Report("q-WZ relation", FAIL, {"n_max": n_max, "k_max": k_max}, checked,
                              {"n": n, "k": k}, elapsed_ms=_ms(t0))
    return Report("q-WZ relation", PASS, {"n_max": n_max, "k_max": k_max}, checked,
                  elapsed_ms=_ms(t0))


# symbolic frame

FRAME = ("q", "u", "v")


@dataclass(frozen=True)
class Linear:
    """c0 + cn*n + ck*k."""
    c0: int = 0
    cn: int = 0
    ck: int = 0

    def shift(self, dn: int, dk: int) -> "Linear":
        return Linear(self.c0 + self.cn * dn + self.ck * dk, self.cn, self.ck)

    def __sub__(self, other: "Linear") -> "Linear":
        return Linear(self.c0 - other.c0, self.cn - other.cn, self.ck - other.ck)


@dataclass(frozen=True)
class Quadratic:
    """c0 + cn n + ck k + cnn n^2 + cnk n k + ckk k^2."""
    c0: int = 0
    cn: int = 0
    ck: int = 0
    cnn: int = 0
    cnk: int = 0
    ckk: int = 0

    @classmethod
    def product(cls, x: Linear, y: Linear) -> "Quadratic":
        return cls(x.c0 * y.c0, x.c0 * y.cn + x.cn * y.c0, x.c0 * y.ck + x.ck * y.c0,
                   x.cn * y.cn, x.cn * y.ck + x.ck * y.cn, x.ck * y.ck)

    def shift(self, dn: int, dk: int) -> "Quadratic":
        c0 = (self.c0 + self.cn * dn + self.ck * dk + self.cnn * dn * dn
              + self.cnk * dn * dk + self.ckk * dk * dk)
        cn = self.cn + 2 * self.cnn * dn + self.cnk * dk
        ck = self.ck + self.cnk * dn + 2 * self.ckk * dk
        return Quadratic(c0, cn, ck, self.cnn, self.cnk, self.ckk)

    def __sub__(self, other: "Quadratic") -> "Quadratic":
        return Quadratic(*(x - y for x, y in zip(self._t(), other._t())))

    def _t(self):
        return (self.c0, self.cn, self.ck, self.cnn, self.cnk, self.ckk)


def frame_monomial(c0: int, cn: int, ck: int) -> tuple[int, int, int]:
    """Exponent vector in (q, u, v) for q^(c0 + cn*n + ck*k)."""
    if cn % 2 or ck % 2:
        raise ValueError(f"q^({c0}{cn:+}n{ck:+}k) is not expressible with u = q^2k, v = q^2n")
    return (c0, ck // 2, cn // 2)


@dataclass
class SymbolicTerm:
    """A q-hypergeometric term in n, k with symbolic indices.

    binomials: (c, exponent) -> power, meaning (1 - c q^exponent)^power.
    pochhammers: (c, e0, step, index) -> power, meaning (c q^e0; q^step)_index^power.
    """
    sign: Linear
    qexp: Quadratic
    binomials: dict = field(default_factory=dict)
    pochhammers: dict = field(default_factory=dict)

    def shift(self, dn: int, dk: int) -> "SymbolicTerm":
        return SymbolicTerm(
            self.sign.shift(dn, dk), self.qexp.shift(dn, dk),
            {(c, e.shift(dn, dk)): p for (c, e), p in self.binomials.items()},
            {(c, e0, s, idx.shift(dn, dk)): p for (c, e0, s, idx), p in self.pochhammers.items()},
        )

    def ratio(self, other: "SymbolicTerm") -> RatFun:
        """self / other as a rational function in the (q, u, v) frame."""
        ds = self.sign - other.sign
        if ds.cn % 2 or ds.ck % 2:
            raise ValueError("sign ratio is not constant")
        dq = self.qexp - other.qexp
        if dq.cnn or dq.cnk or dq.ckk:
            raise ValueError("q-exponent ratio is not linear in n, k")
        unit = ((-1) ** (ds.c0 % 2), frame_monomial(dq.c0, dq.cn, dq.ck))
        num, den = {}, {}

        def put(atom, power):
            if power > 0:
                num[atom] = num.get(atom, 0) + power
            elif power < 0:
                den[atom] = den.get(atom, 0) - power

        for sgn, term in ((1, self), (-1, other)):
            for (c, e), p in term.binomials.items():
                put((c, frame_monomial(e.c0, e.cn, e.ck)), sgn * p)
        groups: dict = {}
        for sgn, term in ((1, self), (-1, other)):
            for (c, e0, s, idx), p in term.pochhammers.items():
                bucket = groups.setdefault((c, e0, s, idx.cn, idx.ck), {})
                bucket[idx.c0] = bucket.get(idx.c0, 0) + sgn * p
        for (c, e0, s, cn, ck), offsets in groups.items():
            if sum(offsets.values()):
                raise ValueError("Pochhammer symbols do not cancel to a finite product")
            base = min(offsets)
            for off, p in offsets.items():
                # (x; q^s)_{L+off} / (x; q^s)_{L+base} = prod_{j=base}^{off-1} (1 - x q^{s(L+j)})
                for j in range(base, off):
                    put((c, frame_monomial(e0 + s * j, s * cn, s * ck)), p)
        return RatFun.from_factors(FactorList(num, unit, FRAME), FactorList(den, None, FRAME))


N_ = Linear(0, 1, 0)
K_ = Linear(0, 0, 1)

SYM_F = SymbolicTerm(
    sign=Linear(0, 0, 1),
    qexp=Quadratic.product(Linear(-2, 0, 1), Linear(1, -2, 1)),
    binomials={(1, Linear(-1, 4, 0)): 1, (1, Linear(1, 0, 0)): -1},
    pochhammers={(1, -1, 2, N_): 3, (1, -1, 2, Linear(0, 1, 1)): 1, (1, -1, 2, K_): -2,
                 (1, 2, 2, N_): -3, (1, 2, 2, Linear(0, 1, -1)): -1},
)

SYM_G = SymbolicTerm(
    sign=Linear(-1, 0, 1),
    qexp=Quadratic.product(Linear(-2, 0, 1), Linear(3, -2, 1)),
    binomials={(1, Linear(1, 0, 0)): -2},
    pochhammers={(1, -1, 2, N_): 3, (1, -1, 2, Linear(-1, 1, 1)): 1, (1, -1, 2, K_): -2,
                 (1, 2, 2, Linear(-1, 1, 0)): -3, (1, 2, 2, Linear(0, 1, -1)): -1},
)


def _fm(c, eq, eu, ev) -> FactorList:
    # single atom (1 - c q^eq u^eu v^ev)
    return FactorList({(c, (eq, eu, ev)): 1}, None, FRAME)


def _unit(c, eq, eu, ev) -> FactorList:
    return FactorList.unit(c, (eq, eu, ev), FRAME)


def _frame_rf(num: FactorList, den: FactorList) -> RatFun:
    return RatFun.from_factors(num, den)


# the closed ratio formulas, written directly in the frame
def stated_ratio_F_prev_over_G() -> RatFun:
    num = _unit(1, 6, -2, 1) * _fm(1, 1, 0, 0) * _fm(1, -1, 0, 2) * _fm(1, -3, 1, 0) ** 2
    den = _fm(1, 2, -1, 1) * _fm(1, 0, 0, 1) ** 3
    return _frame_rf(num, den)


def stated_ratio_F_over_G() -> RatFun:
    num = _unit(-1, 4, -1, 0) * _fm(1, 1, 0, 0) * _fm(1, -1, 0, 2) * _fm(1, -3, 1, 1)
    den = _fm(1, 0, 0, 1) ** 3
    return _frame_rf(num, den)


def stated_ratio_G_next_over_G() -> RatFun:
    num = _unit(1, 4, -1, 0) * _fm(1, -1, 0, 1) ** 3 * _fm(1, -3, 1, 1)
    den = _fm(1, 0, 0, 1) ** 3 * _fm(1, 2, -1, 1)
    return _frame_rf(num, den)


def ratio_identity_sides(constant_term: int = -1) -> tuple[RatFun, RatFun]:
    """Both sides of the rational identity equivalent to the q-WZ relation.

    ``constant_term`` is the trailing constant on the right (the identity has -1);
    other values exist only to probe that the check can fail.
    """
    first = _frame_rf(_unit(1, 6, -2, 1) * _fm(1, -1, 0, 2) * _fm(1, -3, 1, 0) ** 3,
                      _fm(1, 2, -1, 1) * _fm(1, 0, 0, 1) ** 3)
    second = _frame_rf(_unit(1, 4, -1, 0) * _fm(1, -4, 1, 0) * _fm(1, -1, 0, 2) * _fm(1, -3, 1, 1),
                       _fm(1, 0, 0, 1) ** 3)
    lhs = first + second
    rhs = stated_ratio_G_next_over_G() + RatFun.const(constant_term, FRAME)
    return lhs, rhs


def frame_bracket(c0: int, ck: int = 0, cn: int = 0) -> RatFun:
    """[c0 + cn*n + ck*k] in the frame, as (1 - q^...)/(1 - q)."""
    return _frame_rf(FactorList({(1, frame_monomial(c0, cn, ck)): 1}, None, FRAME), _fm(1, 1, 0, 0))


@dataclass
class SymbolicCheck:
    identity: bool
    ratio_F_prev: bool
    ratio_F: bool
    ratio_G_next: bool
    relation: bool

    def __bool__(self):
        return all((self.identity, self.ratio_F_prev, self.ratio_F, self.ratio_G_next, self.relation))


def derived_ratios() -> tuple[RatFun, RatFun, RatFun]:
    """F(n,k-1)/G(n,k), F(n,k)/G(n,k), G(n+1,k)/G(n,k) from the defining products."""
    return (SYM_F.shift(0, -1).ratio(SYM_G), SYM_F.ratio(SYM_G), SYM_G.shift(1, 0).ratio(SYM_G))


def symbolic_check(constant_term: int = -1) -> SymbolicCheck:
    lhs, rhs = ratio_identity_sides(constant_term)
    r1, r2, r3 = derived_ratios()
    one = RatFun.const(1, FRAME)
    relation = frame_bracket(-3, ck=2) * r1 - frame_bracket(-4, ck=2) * r2 - (r3 - one)
    return SymbolicCheck(
        identity=lhs == rhs,
        ratio_F_prev=r1 == stated_ratio_F_prev_over_G(),
        ratio_F=r2 == stated_ratio_F_over_G(),
        ratio_G_next=r3 == stated_ratio_G_next_over_G(),
        relation=relation.is_zero,
    )


def check_ratio_identity_symbolic(constant_term: int = -1) -> bool:
    """Trivariate check of the ratio identity and of the three ratio formulas."""
    return bool(symbolic_check(constant_term))


def frame_to_q(f: RatFun) -> RatFun:
    """Move a frame RatFun whose u, v have been specialized into the (q, a) ring."""
    def conv_poly(p: LaurentPoly) -> LaurentPoly:
        out = {}
        for (eq, eu, ev), c in p.items():
            if eu or ev:
                raise ValueError("u and v must be specialized first")
            out[(eq, 0)] = c
        return LaurentPoly(out)

    atoms = {}
    for (c, (eq, eu, ev)), m in f.den.atoms.items():
        if eu or ev:
            raise ValueError("u and v must be specialized first")
        atoms[(c, (eq, 0))] = m
    unit = (f.den.unit_coeff, (f.den.unit_exps[0], 0))
    return RatFun(conv_poly(f.num), FactorList(atoms, unit))


def specialize_frame(f: RatFun, n: int, k: int) -> RatFun:
    u = LaurentPoly.monomial(1, (2 * k, 0, 0), FRAME)
    v = LaurentPoly.monomial(1, (2 * n, 0, 0), FRAME)
    return frame_to_q(f.subs({"u": u, "v": v}))


# summands of the three families


def theorem1_term(k: int) -> RatFun:
    """[4k-1] (q^-1;q^2)_k^4 / (q^2;q^2)_k^4 q^(4k)."""
    bnum, bden = _bracket_factors(4 * k - 1)
    num = FactorList.unit(1, (4 * k, 0)) * bnum * _A(k) ** 4
    return RatFun.from_factors(num, bden * _B(k) ** 4)


def theorem2_term(k: int) -> RatFun:
    """The parametric summand with (a q^-1;q^2)_k (q^-1/a;q^2)_k over (a q^2;q^2)_k (q^2/a;q^2)_k."""
    bnum, bden = _bracket_factors(4 * k - 1)
    num = (FactorList.unit(1, (4 * k, 0)) * bnum * q_pochhammer(1, -1, 1, 2, k)
           * q_pochhammer(1, -1, -1, 2, k) * _A(k) ** 2)
    den = bden * q_pochhammer(1, 2, 1, 2, k) * q_pochhammer(1, 2, -1, 2, k) * _B(k) ** 2
    return RatFun.from_factors(num, den)


def theorem3_term(k: int) -> RatFun:
    """[4k-1] (q^-2;q^4)_k^2 / (q^4;q^4)_k^2 q^(4k), the base-q^2 Pochhammers by substitution."""
    sq = {"q": q ** 2}
    bnum, bden = _bracket_factors(4 * k - 1)
    num = FactorList.unit(1, (4 * k, 0)) * bnum * _A(k).subs(sq) ** 2
    return RatFun.from_factors(num, bden * _B(k).subs(sq) ** 2)


def direct_sum(term: Callable[[int], RatFun], upper: int) -> RatFun:
    return rf_combine(term(k) for k in range(upper + 1))


# closed forms


def _odd(m: int, low: int = 3):
    if m % 2 == 0:
        raise BadParity(f"m = {m} must be odd")
    if m < low:
        raise ValueError(f"m = {m} must be at least {low}")


def closed_form_half(m: int) -> RatFun:
    """Closed form of the theorem-1 sum up to (m+1)/2."""
    _odd(m)
    h = (m - 1) // 2
    bm = q_int(m) ** 4
    numer = -((1 + q) * bm * q_int(m + 1) * q_int(m + 2) + q ** (m + 1) * bm) * q_binom(m - 1, h) ** 4
    # 1/[m+1]^4 = (1-q)^4 / (1-q^(m+1))^4
    den = (FactorList.unit(1, (1, 0)) * FactorList({(1, (m + 1, 0)): 4})
           * q_pochhammer(-1, 1, 0, 1, h) ** 8)
    return RatFun(numer * (1 - q) ** 4, den)


def closed_form_full(m: int) -> RatFun:
    """Closed form of the theorem-1 sum up to m-1."""
    _odd(m)
    numer = -((1 + q) * q_int(2 * m - 2) * q_int(2 * m - 1) + q ** (2 * m - 2)) * q_binom(2 * m - 2, m - 1) ** 4
    den = FactorList.unit(1, (1, 0)) * q_pochhammer(-1, 1, 0, 1, m - 1) ** 8
    return RatFun(numer, den)


def boundary_G_half(m: int) -> tuple[RatFun, RatFun]:
    """Closed expressions for G((m+3)/2, 1) and G((m+3)/2, 2)."""
    _odd(m)
    h = (m - 1) // 2
    cb = q_binom(m - 1, h) ** 4
    dd = q_pochhammer(-1, 1, 0, 1, h) ** 8
    inv_m1 = q_int_rf(m + 1).inverse()
    g1 = RatFun(q ** (m - 3) * q_int(m) ** 4 * cb, dd) * inv_m1 ** 4
    g2 = RatFun(-(q ** -2) * q_int(m) ** 4 * q_int(m + 2) * cb, dd) * inv_m1 ** 3
    return g1, g2


def telescoped_sum(upper: int, G: Callable = q_G) -> RatFun:
    """Theorem-1 sum up to ``upper`` read off from the boundary values of G.

    Summing the WZ relation leaves  sum_n F(n,0) = (1+q)/q G(upper+1,2) - q G(upper+1,1),
    and F(n,0) is q^-2 times the summand.
    """
    top = upper + 1
    return (G(top, 2) * (1 + q) * q - G(top, 1) * q ** 3)


def closed_form_param(N: int) -> RatFun:
    """Closed form of the parametric (a-deformed) sum up to N, bivariate in q and a."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    poly = (((a + 1) ** 2 * q ** (2 * N + 1) - a * (1 + q) * (1 + q ** (4 * N + 1)))
            * q_binom(2 * N, N) ** 2)
    num = q_pochhammer(1, 1, 1, 2, N) * q_pochhammer(1, 1, -1, 2, N)
    den = (FactorList.unit(1, (1, 0)) * FactorList.from_poly(a - q) * FactorList.from_poly(1 - a * q)
           * q_pochhammer(1, 2, 1, 2, N) * q_pochhammer(1, 2, -1, 2, N) * q_pochhammer(-1, 1, 0, 1, N) ** 4)
    return RatFun.from_factors(num, den) * poly


def closed_form_aneg1(N: int) -> RatFun:
    """Closed form of the theorem-3 sum up to N (the a = -1 case)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    numer = -(1 + q ** (4 * N + 1)) * q_binom(2 * N, N).subs({"q": q ** 2}) ** 2
    den = (FactorList.unit(1, (1, 0)) * FactorList.from_poly(1 + q)
           * q_pochhammer(-1, 2, 0, 2, N) ** 4)
    return RatFun(numer, den)


@dataclass
class ClosedFormCheck:
    name: str
    index: int
    results: dict

    def __bool__(self):
        return all(self.results.values())


def check_closed_form_half(m: int) -> ClosedFormCheck:
    direct = direct_sum(theorem1_term, (m + 1) // 2)
    return ClosedFormCheck("half-sum closed form", m, {
        "closed_form": closed_form_half(m) == direct,
        "telescoped": telescoped_sum((m + 1) // 2) == direct,
    })


def check_closed_form_full(m: int) -> ClosedFormCheck:
    direct = direct_sum(theorem1_term, m - 1)
    return ClosedFormCheck("full-sum closed form", m, {
        "closed_form": closed_form_full(m) == direct,
        "telescoped": telescoped_sum(m - 1) == direct,
    })


def check_closed_form_param(N: int) -> ClosedFormCheck:
    cf = closed_form_param(N)
    res = {"direct_sum": cf == direct_sum(theorem2_term, N),
           "induction_step": closed_form_param(N + 1) - cf == theorem2_term(N + 1)}
    return ClosedFormCheck("parametric closed form", N, res)


def check_closed_form_aneg1(N: int) -> ClosedFormCheck:
    cf = closed_form_aneg1(N)
    at_minus1 = closed_form_param(N).subs({"a": -1})
    return ClosedFormCheck("a=-1 closed form", N, {
        "specialization": cf == at_minus1,
        "direct_sum": cf == direct_sum(theorem3_term, N),
    })


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)
