"""Rational functions with an expanded numerator over a factored denominator."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from ..errors import DivisionByZero, PoleHit
from .factors import FactorList
from .poly import QA, LaurentPoly, norm_coeff


class RatFun:
    """``num / den`` with ``den`` a nonzero :class:`FactorList`.

    Equality is value equality (cross-multiplication), so two RatFuns with
    different denominators can compare equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: FactorList | None = None):
        if not isinstance(num, LaurentPoly):
            raise TypeError("numerator must be a LaurentPoly")
        if den is None:
            den = FactorList.one(num.gens)
        if den.gens != num.gens:
            raise ValueError("numerator and denominator generators differ")
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        self.num = num
        self.den = den

    @property
    def gens(self) -> tuple:
        return self.num.gens

    @classmethod
    def const(cls, c, gens: tuple = QA) -> "RatFun":
        return cls(LaurentPoly.const(c, gens))

    @classmethod
    def from_factors(cls, num: FactorList, den: FactorList) -> "RatFun":
        """Build from two factor lists, cancelling shared atoms before expanding."""
        num, den = num.split_common(den)
        return cls(num.expand(), den)

    def _coerce(self, other) -> "RatFun | None":
        if isinstance(other, RatFun):
            if other.gens != self.gens:
                raise ValueError("generator mismatch")
            return other
        if isinstance(other, LaurentPoly):
            return RatFun(other)
        if isinstance(other, Rational) and not isinstance(other, bool):
            return RatFun.const(other, self.gens)
        return None

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            return self
        if self.num.is_zero:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        common = self.den.lcm(other.den)
        n1 = self.den.cofactor(common).apply_to(self.num)
        n2 = other.den.cofactor(common).apply_to(other.num)
        return RatFun(n1 + n2, common)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return RatFun(self.num.scale(other), self.den)
        if isinstance(other, LaurentPoly):
            return RatFun(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        """Reciprocal; the numerator must be a monomial or a binomial."""
        if self.num.is_zero:
            raise DivisionByZero("inverse of zero")
        return RatFun(self.den.expand(), FactorList.from_poly(self.num))

    def __truediv__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero("division by zero")
            return RatFun(self.num.scale(Fraction(1) / Fraction(other)), self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** -k
        return RatFun(self.num ** k, self.den ** k)

    # comparison

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).num.is_zero

    __hash__ = None

    # substitution and evaluation

    def subs(self, mapping: Mapping[str, object]) -> "RatFun":
        return RatFun(self.num.subs(mapping), self.den.subs(mapping))

    def evaluate(self, values=None, **kw):
        vals = dict(values or {}, **kw)
        d = self.den.evaluate(vals)
        if d == 0:
            raise PoleHit(f"denominator vanishes at {vals}")
        return norm_coeff(Fraction(self.num.evaluate(vals)) / d)

    def to_str(self) -> str:
        return f"({self.num.to_str()}) / ({self.den.to_str()})"

    __str__ = to_str

    def __repr__(self):
        return f"RatFun({self.to_str()!r})"


def rf_combine(terms: Iterable[RatFun]) -> RatFun:
    """Sum of RatFuns over the lcm of their factored denominators.

    Folding left keeps nested denominators (the usual case for partial sums of
    hypergeometric terms) cheap: each step multiplies the running numerator
    only by the atoms that are new in the next term.
    """
    it = iter(terms)
    try:
        total = next(it)
    except StopIteration:
        raise ValueError("rf_combine needs at least one term") from None
    for t in it:
        total = total + t
    return total


def rf_specialize(f: RatFun, var: str, value) -> RatFun:
    """Substitute ``var := value`` (a rational or a monomial) into ``f``."""
    if var not in f.gens:
        raise ValueError(f"unknown variable {var!r}")
    return f.subs({var: value})
