"""Sparse multivariate Laurent polynomials over the rationals.

Terms live in a dict mapping exponent tuples to nonzero coefficients.
Coefficients are kept as ``int`` whenever they are integral and fall back
to :class:`fractions.Fraction` otherwise; mixing the two is transparent.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from ..errors import DivisionByZero, NotDivisible, NotUnivariate

Coeff = Union[int, Fraction]
Exps = tuple

QA = ("q", "a")


def norm_coeff(c) -> Coeff:
    if type(c) is int:
        return c
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an exact rational, got {c!r}")
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def cdiv(x: Coeff, y: Coeff) -> Coeff:
    """Exact quotient of two rationals, kept integral where possible."""
    if y == 1:
        return x
    if y == -1:
        return -x
    if type(x) is int and type(y) is int:
        quo, rem = divmod(x, y)
        if not rem:
            return quo
    r = Fraction(x) / y
    return r.numerator if r.denominator == 1 else r


def _adder(n):
    if n == 1:
        return lambda e, f: (e[0] + f[0],)
    if n == 2:
        return lambda e, f: (e[0] + f[0], e[1] + f[1])
    if n == 3:
        return lambda e, f: (e[0] + f[0], e[1] + f[1], e[2] + f[2])
    return lambda e, f: tuple(map(operator.add, e, f))


_ADDERS = {}


def exp_add(n):
    try:
        return _ADDERS[n]
    except KeyError:
        _ADDERS[n] = fn = _adder(n)
        return fn


def exp_neg(e: Exps) -> Exps:
    return tuple(-x for x in e)


class LaurentPoly:
    """An immutable Laurent polynomial in the variables ``gens``."""

    __slots__ = ("gens", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Coeff] | Iterable | None = None, gens: tuple = QA):
        self.gens = tuple(gens)
        self._hash = None
        clean = {}
        n = len(self.gens)
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                e = tuple(int(x) for x in e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match generators {self.gens}")
                c = norm_coeff(c)
                if c:
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict, gens: tuple) -> "LaurentPoly":
        # trusted path: no zero coefficients, normalized exponents
        obj = cls.__new__(cls)
        obj.gens = gens
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, gens: tuple = QA) -> "LaurentPoly":
        return cls._raw({}, tuple(gens))

    @classmethod
    def const(cls, c, gens: tuple = QA) -> "LaurentPoly":
        gens = tuple(gens)
        c = norm_coeff(c)
        return cls._raw({(0,) * len(gens): c} if c else {}, gens)

    @classmethod
    def monomial(cls, c, exps: Exps, gens: tuple = QA) -> "LaurentPoly":
        gens = tuple(gens)
        c = norm_coeff(c)
        exps = tuple(int(x) for x in exps)
        if len(exps) != len(gens):
            raise ValueError("exponent length mismatch")
        return cls._raw({exps: c} if c else {}, gens)

    @classmethod
    def gen(cls, name: str, gens: tuple = QA) -> "LaurentPoly":
        gens = tuple(gens)
        e = [0] * len(gens)
        e[gens.index(name)] = 1
        return cls._raw({tuple(e): 1}, gens)

    @classmethod
    def parse(cls, text: str, gens: tuple = QA) -> "LaurentPoly":
        """Inverse of :meth:`to_str`."""
        gens = tuple(gens)
        text = text.strip()
        if text == "0":
            return cls.zero(gens)
        terms = {}
        for chunk in text.split(" + "):
            parts = chunk.split("*")
            c = Fraction(parts[0])
            e = [0] * len(gens)
            for p in parts[1:]:
                name, _, power = p.partition("^")
                e[gens.index(name)] = int(power)
            terms[tuple(e)] = c
        return cls(terms, gens)

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_constant(self) -> bool:
        if not self._terms:
            return True
        return len(self._terms) == 1 and not any(next(iter(self._terms)))

    def constant_value(self) -> Coeff:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), 0)

    def coeff(self, exps: Exps) -> Coeff:
        return self._terms.get(tuple(exps), 0)

    def _index(self, var) -> int:
        return var if isinstance(var, int) else self.gens.index(var)

    def involves(self, var) -> bool:
        i = self._index(var)
        return any(e[i] for e in self._terms)

    def variables(self) -> tuple:
        return tuple(g for i, g in enumerate(self.gens) if self.involves(i))

    def degree(self, var="q") -> int:
        i = self._index(var)
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(e[i] for e in self._terms)

    def min_degree(self, var="q") -> int:
        i = self._index(var)
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return min(e[i] for e in self._terms)

    def span(self, var="q") -> int:
        return self.degree(var) - self.min_degree(var) if self._terms else 0

    def min_exps(self) -> Exps:
        n = len(self.gens)
        return tuple(min(e[i] for e in self._terms) for i in range(n))

    # arithmetic

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch: {self.gens} vs {other.gens}")
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return LaurentPoly.const(other, self.gens)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                del out[e]
        return LaurentPoly._raw(out, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.gens)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            c = out.get(e, 0) - c
            if c:
                out[e] = c
            else:
                del out[e]
        return LaurentPoly._raw(out, self.gens)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly.zero(self.gens)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (e, c), = b.items()
            return self.shift(e).scale(c) if b is other._terms else other.shift(e).scale(c)
        add = exp_add(len(self.gens))
        out: dict = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                k = add(e1, e2)
                out[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self.gens)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial:
                raise ValueError("negative powers only exist for monomials")
            (e, c), = self._terms.items()
            return LaurentPoly.monomial(Fraction(1) / c ** -k, tuple(x * k for x in e), self.gens)
        result = LaurentPoly.const(1, self.gens)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "LaurentPoly":
        c = norm_coeff(c)
        if not c:
            return LaurentPoly.zero(self.gens)
        if c == 1:
            return self
        return LaurentPoly._raw({e: norm_coeff(v * c) for e, v in self._terms.items()}, self.gens)

    def shift(self, exps: Exps) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        if not any(exps):
            return self
        add = exp_add(len(self.gens))
        return LaurentPoly._raw({add(e, exps): c for e, c in self._terms.items()}, self.gens)

    def mul_binomial(self, c, exps: Exps, power: int = 1) -> "LaurentPoly":
        """Return ``self * (1 - c*x^exps)**power`` without building the power."""
        add = exp_add(len(self.gens))
        terms = self._terms
        for _ in range(power):
            out = dict(terms)
            get = out.get
            for e, v in terms.items():
                k = add(e, exps)
                w = get(k, 0) - c * v
                if w:
                    out[k] = w
                else:
                    del out[k]
            terms = out
        return LaurentPoly._raw(terms, self.gens)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self._terms.items())))
        return self._hash

    # substitution and evaluation

    def subs(self, mapping: Mapping[str, object]) -> "LaurentPoly":
        """Substitute generators by rationals or Laurent polynomials.

        Monomial images are handled term-by-term; general images are expanded
        by powering, which requires nonnegative exponents for that variable.
        """
        gens = self.gens
        images = []
        for i, g in enumerate(gens):
            img = mapping.get(g)
            if img is None:
                images.append(None)
                continue
            if not isinstance(img, LaurentPoly):
                img = LaurentPoly.const(img, gens)
            elif img.gens != gens:
                raise ValueError("substitution image must share generators")
            images.append(img)
        if all(img is None for img in images):
            return self
        if all(img is None or img.is_monomial or img.is_zero for img in images):
            return self._subs_monomial(images)
        out = LaurentPoly.zero(gens)
        cache: dict = {}
        for e, c in self._terms.items():
            term = LaurentPoly.monomial(c, tuple(0 if images[i] is not None else x for i, x in enumerate(e)), gens)
            for i, x in enumerate(e):
                img = images[i]
                if img is None or x == 0:
                    continue
                key = (i, x)
                if key not in cache:
                    cache[key] = img ** x
                term = term * cache[key]
            out = out + term
        return out

    def _subs_monomial(self, images) -> "LaurentPoly":
        gens = self.gens
        n = len(gens)
        maps = []
        for img in images:
            if img is None:
                maps.append(None)
            elif img.is_zero:
                maps.append((0, (0,) * n))
            else:
                (e, c), = img._terms.items()
                maps.append((c, e))
        out: dict = {}
        for e, c in self._terms.items():
            new_e = [0] * n
            coef = c
            for i, x in enumerate(e):
                m = maps[i]
                if m is None:
                    new_e[i] += x
                    continue
                if x == 0:
                    continue
                mc, me = m
                if mc == 0:
                    if x < 0:
                        raise DivisionByZero("negative power of a variable sent to 0")
                    coef = 0
                    break
                coef = coef * (mc ** x if x > 0 else Fraction(1) / mc ** -x)
                for j in range(n):
                    new_e[j] += me[j] * x
            if coef:
                k = tuple(new_e)
                out[k] = out.get(k, 0) + coef
        return LaurentPoly._raw({e: norm_coeff(c) for e, c in out.items() if c}, gens)

    def evaluate(self, values: Mapping[str, object] | None = None, **kw) -> Coeff:
        """Evaluate at rational points; every generator present must be given."""
        vals = dict(values or {}, **kw)
        pts = []
        for i, g in enumerate(self.gens):
            if g in vals:
                pts.append(Fraction(vals[g]))
            elif self.involves(i):
                raise ValueError(f"no value for {g}")
            else:
                pts.append(Fraction(1))
        total = Fraction(0)
        for e, c in self._terms.items():
            t = Fraction(c)
            for x, p in zip(e, pts):
                if x:
                    if p == 0 and x < 0:
                        raise DivisionByZero("evaluating a negative power at 0")
                    t *= p ** x
            total += t
        return norm_coeff(total)

    # serialization

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            s = [str(c), f"{self.gens[0]}^{e[0]}"]
            s += [f"{g}^{x}" for g, x in zip(self.gens[1:], e[1:]) if x]
            parts.append("*".join(s))
        return " + ".join(parts)

    __str__ = to_str

    def __repr__(self):
        return f"LaurentPoly({self.to_str()!r})"

    # univariate dense helpers

    def univariate_var(self) -> int | None:
        """Index of the single variable involved, -1 for constants, None if several."""
        used = [i for i in range(len(self.gens)) if self.involves(i)]
        if not used:
            return -1
        return used[0] if len(used) == 1 else None

    def to_dense(self, var=0) -> tuple[int, list]:
        """(offset, coefficients) with coefficients[j] the coefficient of x^(offset+j)."""
        i = self._index(var)
        for e in self._terms:
            if any(x for j, x in enumerate(e) if j != i):
                raise NotUnivariate(f"{self} involves more than {self.gens[i]}")
        if not self._terms:
            return 0, []
        lo = min(e[i] for e in self._terms)
        hi = max(e[i] for e in self._terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            coeffs[e[i] - lo] = c
        return lo, coeffs

    @classmethod
    def from_dense(cls, offset: int, coeffs: list, var=0, gens: tuple = QA) -> "LaurentPoly":
        gens = tuple(gens)
        i = var if isinstance(var, int) else gens.index(var)
        n = len(gens)
        out = {}
        for j, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = offset + j
                out[tuple(e)] = norm_coeff(c)
        return cls._raw(out, gens)

    # division

    def div_exact(self, d: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / d`` in the Laurent ring, or raise :class:`NotDivisible`."""
        d = self._coerce(d)
        if d is None:
            raise TypeError("divisor must be a LaurentPoly or rational")
        if d.is_zero:
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero:
            return self
        if d.is_monomial:
            (e, c), = d._terms.items()
            inv = exp_neg(e)
            add = exp_add(len(self.gens))
            return LaurentPoly._raw({add(k, inv): cdiv(v, c) for k, v in self._terms.items()}, self.gens)
        pmin = self.min_exps()
        dmin = d.min_exps()
        p0 = self.shift(exp_neg(pmin))
        d0 = d.shift(exp_neg(dmin))
        quo = _poly_div(p0, d0)
        return quo.shift(tuple(x - y for x, y in zip(pmin, dmin)))

    def divides(self, p: "LaurentPoly") -> bool:
        try:
            p.div_exact(self)
        except NotDivisible:
            return False
        return True

    def __truediv__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPoly):
            return self.div_exact(other)
        return NotImplemented

    def divmod_univariate(self, d: "LaurentPoly", var=0) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division of polynomials in one variable (offsets stripped first).

        Both operands are first divided by their lowest power of the variable,
        so the remainder is that of the underlying ordinary polynomials.
        """
        i = self._index(var)
        if d.is_zero:
            raise DivisionByZero("division by the zero polynomial")
        poff, p = self.to_dense(i)
        doff, dd = d.to_dense(i)
        quo, rem = _dense_divmod(p, dd)
        gens = self.gens
        return (LaurentPoly.from_dense(poff - doff, quo, i, gens),
                LaurentPoly.from_dense(poff, rem, i, gens))


def _dense_divmod(p: list, d: list) -> tuple[list, list]:
    r = list(p)
    dd = len(d) - 1
    lc = d[-1]
    nz = [(j, c) for j, c in enumerate(d[:-1]) if c]
    if len(r) <= dd:
        return [], r
    quo = [0] * (len(r) - dd)
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top]
        if not c:
            continue
        c = cdiv(c, lc)
        s = top - dd
        quo[s] = c
        r[top] = 0
        for j, dc in nz:
            r[s + j] -= c * dc
    rem = r[:dd]
    return quo, rem


def _poly_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    # p, d have all minimal exponents zero; d is not a monomial
    gens = p.gens
    n = len(gens)
    dvar = [i for i in range(n) if d.involves(i)]
    main = max(dvar)
    pv = p.univariate_var()
    if len(dvar) == 1 and pv in (-1, main):
        _, pc = p.to_dense(main)
        _, dc = d.to_dense(main)
        quo, rem = _dense_divmod(pc, dc)
        if any(rem):
            raise NotDivisible(f"remainder nonzero dividing by {d}",
                               remainder=LaurentPoly.from_dense(0, rem, main, gens))
        return LaurentPoly.from_dense(0, quo, main, gens)

    def split(poly):
        out: dict = {}
        for e, c in poly.items():
            k = e[main]
            rest = e[:main] + (0,) + e[main + 1:]
            out.setdefault(k, {})[rest] = c
        return out

    P = split(p)
    D = {k: LaurentPoly._raw(v, gens) for k, v in split(d).items()}
    ddeg = max(D)
    lcd = D[ddeg]
    add = exp_add(n)
    quotient: dict = {}
    while P:
        top = max(P)
        if top < ddeg:
            rem = {}
            for k, v in P.items():
                for e, c in v.items():
                    rem[e[:main] + (k,) + e[main + 1:]] = c
            raise NotDivisible(f"remainder nonzero dividing by {d}", remainder=LaurentPoly._raw(rem, gens))
        c = LaurentPoly._raw(P[top], gens).div_exact(lcd)
        s = top - ddeg
        for e, v in c.items():
            quotient[e[:main] + (s,) + e[main + 1:]] = v
        for k, dk in D.items():
            slot = P.setdefault(s + k, {})
            get = slot.get
            for e2, c2 in dk.items():
                for e1, c1 in c.items():
                    key = add(e1, e2)
                    w = get(key, 0) - c1 * c2
                    if w:
                        slot[key] = w
                    else:
                        slot.pop(key, None)
            if not slot:
                del P[s + k]
        assert top not in P, "leading term failed to cancel"
    return LaurentPoly._raw(quotient, gens)


def poly_gcd_q(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two Laurent polynomials in q alone, up to powers of q."""
    for x in (p, r):
        if any(e[1:] != (0,) * (len(e) - 1) for e, _ in x.items()):
            raise NotUnivariate(f"{x} is not univariate in {x.gens[0]}")
    gens = p.gens
    _, a = p.to_dense(0)
    _, b = r.to_dense(0)
    a = _strip_low(a)
    b = _strip_low(b)
    while b:
        _, rem = _dense_divmod(a, b)
        while rem and not rem[-1]:
            rem.pop()
        a, b = b, rem
    if not a:
        return LaurentPoly.zero(gens)
    lc = a[-1]
    return LaurentPoly.from_dense(0, [cdiv(c, lc) for c in a], 0, gens)


def _strip_low(c: list) -> list:
    i = 0
    while i < len(c) and not c[i]:
        i += 1
    c = c[i:]
    while c and not c[-1]:
        c = c[:-1]
    return c
