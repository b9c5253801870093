"""Exact arithmetic core: Laurent polynomials, factored denominators, rational functions."""

from fractions import Fraction as Rational

from ..errors import DivisionByZero, NotDivisible, NotUnivariate, PoleHit
from .factors import FactorList
from .poly import QA, LaurentPoly, poly_gcd_q
from .ratfun import RatFun, rf_combine, rf_specialize

q = LaurentPoly.gen("q")
a = LaurentPoly.gen("a")
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.zero()


def lp_arith(op: str, x: LaurentPoly, y) -> LaurentPoly:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "pow":
        if not isinstance(y, int) or y < 0:
            raise ValueError("pow exponent must be a nonnegative integer")
        return x ** y
    raise ValueError(f"unknown operation {op!r}")


def lp_div_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return p.div_exact(d)


__all__ = [
    "QA", "Rational", "LaurentPoly", "FactorList", "RatFun",
    "q", "a", "ONE", "ZERO",
    "lp_arith", "lp_div_exact", "poly_gcd_q", "rf_combine", "rf_specialize",
    "DivisionByZero", "NotDivisible", "NotUnivariate", "PoleHit",
]
