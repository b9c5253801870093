"""Factored products of binomials ``(1 - c*x^e)`` times a monomial unit."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import PoleHit
from .poly import QA, Coeff, LaurentPoly, exp_add, exp_neg, norm_coeff

Atom = tuple  # (c, exps): the factor 1 - c*x^exps


def _positive(e) -> bool:
    for x in e:
        if x:
            return x > 0
    return False


def normalize_atom(c, e) -> tuple[Coeff, tuple, Atom | None]:
    """Rewrite ``1 - c*x^e`` as ``unit * (1 - c'*x^e')`` with ``e'`` lexicographically positive.

    Returns ``(unit_coeff, unit_exps, atom)``; ``atom`` is None when the factor is
    a constant, in which case the unit carries its whole value.
    """
    c = norm_coeff(c)
    e = tuple(e)
    n = len(e)
    if not c:
        return 1, (0,) * n, None
    if not any(e):
        return norm_coeff(1 - c), (0,) * n, None
    if _positive(e):
        return 1, (0,) * n, (c, e)
    # 1 - c x^e = -c x^e (1 - c^-1 x^-e)
    return -c, e, (norm_coeff(Fraction(1) / c), exp_neg(e))


class FactorList:
    """A multiset of binomial atoms ``1 - c*x^e`` with a monomial unit in front.

    A unit coefficient of zero encodes the zero product (for instance a
    q-shifted factorial that runs into a factor ``1 - 1``).
    """

    __slots__ = ("gens", "atoms", "unit_coeff", "unit_exps", "_expanded")

    def __init__(self, atoms: Mapping[Atom, int] | Iterable[Atom] = (), unit: tuple | None = None, gens: tuple = QA):
        self.gens = gens = tuple(gens)
        n = len(gens)
        uc, ue = (1, (0,) * n) if unit is None else (norm_coeff(unit[0]), tuple(unit[1]))
        add = exp_add(n)
        counts: Counter = Counter()
        items = atoms.items() if isinstance(atoms, Mapping) else ((a, 1) for a in atoms)
        for (c, e), mult in items:
            if mult < 0:
                raise ValueError("atom multiplicities must be nonnegative")
            if not mult:
                continue
            if len(e) != n:
                raise ValueError("atom exponent length mismatch")
            cu, eu, atom = normalize_atom(c, e)
            uc = uc * cu ** mult
            ue = add(ue, tuple(x * mult for x in eu))
            if atom is not None:
                counts[atom] += mult
        self.unit_coeff = norm_coeff(uc)
        self.unit_exps = ue if self.unit_coeff else (0,) * n
        self.atoms = {} if not self.unit_coeff else dict(counts)
        self._expanded = None

    @classmethod
    def one(cls, gens: tuple = QA) -> "FactorList":
        return cls((), None, gens)

    @classmethod
    def unit(cls, c, exps, gens: tuple = QA) -> "FactorList":
        return cls((), (c, exps), gens)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "FactorList":
        """Factor a monomial or binomial; anything longer raises ValueError."""
        if p.is_zero:
            return cls((), (0, (0,) * len(p.gens)), p.gens)
        items = p.sorted_items()
        if len(items) == 1:
            (e, c), = items
            return cls((), (c, e), p.gens)
        if len(items) == 2:
            (e0, c0), (e1, c1) = items
            rel = tuple(x - y for x, y in zip(e1, e0))
            # c0 x^e0 + c1 x^e1 = c0 x^e0 (1 - (-c1/c0) x^(e1-e0))
            return cls({(norm_coeff(-Fraction(c1) / c0), rel): 1}, (c0, e0), p.gens)
        raise ValueError(f"cannot factor {p} into binomial atoms")

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.unit_coeff

    @property
    def is_unit(self) -> bool:
        return bool(self.unit_coeff) and not self.atoms

    def atom_poly(self, atom: Atom) -> LaurentPoly:
        c, e = atom
        n = len(self.gens)
        return LaurentPoly({(0,) * n: 1, e: -c}, self.gens)

    def unit_poly(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.unit_coeff, self.unit_exps, self.gens)

    def __iter__(self):
        """Yield ``(atom_poly, multiplicity)`` in canonical order."""
        for atom in sorted(self.atoms, key=_atom_key):
            yield self.atom_poly(atom), self.atoms[atom]

    def degree_span(self, var="q") -> int:
        i = self.gens.index(var) if isinstance(var, str) else var
        return sum(abs(e[i]) * m for (c, e), m in self.atoms.items())

    def involves(self, var) -> bool:
        i = self.gens.index(var) if isinstance(var, str) else var
        return any(e[i] for (c, e) in self.atoms)

    # algebra

    def _check(self, other: "FactorList"):
        if other.gens != self.gens:
            raise ValueError("generator mismatch")

    def __mul__(self, other: "FactorList") -> "FactorList":
        if not isinstance(other, FactorList):
            return NotImplemented
        self._check(other)
        counts = Counter(self.atoms)
        counts.update(other.atoms)
        add = exp_add(len(self.gens))
        return FactorList._build(counts, self.unit_coeff * other.unit_coeff,
                                 add(self.unit_exps, other.unit_exps), self.gens)

    def __pow__(self, k: int) -> "FactorList":
        if not isinstance(k, int) or k < 0:
            raise ValueError("FactorList powers must be nonnegative integers")
        return FactorList._build({a: m * k for a, m in self.atoms.items()}, self.unit_coeff ** k,
                                 tuple(x * k for x in self.unit_exps), self.gens)

    @classmethod
    def _build(cls, counts, uc, ue, gens) -> "FactorList":
        obj = cls.__new__(cls)
        obj.gens = gens
        obj.unit_coeff = norm_coeff(uc)
        obj.unit_exps = tuple(ue) if obj.unit_coeff else (0,) * len(gens)
        obj.atoms = {a: m for a, m in counts.items() if m} if obj.unit_coeff else {}
        obj._expanded = None
        return obj

    def lcm(self, other: "FactorList") -> "FactorList":
        """Least common multiple of the atom multisets; units are dropped."""
        self._check(other)
        counts = dict(self.atoms)
        for a, m in other.atoms.items():
            if counts.get(a, 0) < m:
                counts[a] = m
        return FactorList._build(counts, 1, (0,) * len(self.gens), self.gens)

    def cofactor(self, multiple: "FactorList") -> "FactorList":
        """``multiple / self`` as a FactorList; every atom of self must occur in ``multiple``."""
        self._check(multiple)
        if self.is_zero:
            raise ZeroDivisionError("cofactor of the zero product")
        counts = dict(multiple.atoms)
        for a, m in self.atoms.items():
            left = counts.get(a, 0) - m
            if left < 0:
                raise ValueError("atom multiset is not contained in the multiple")
            counts[a] = left
        uc = Fraction(multiple.unit_coeff) / self.unit_coeff
        ue = tuple(x - y for x, y in zip(multiple.unit_exps, self.unit_exps))
        return FactorList._build(counts, uc, ue, self.gens)

    def split_common(self, other: "FactorList") -> tuple["FactorList", "FactorList"]:
        """Remove common atoms from both lists, keeping units."""
        self._check(other)
        a = dict(self.atoms)
        b = dict(other.atoms)
        for atom in set(a) & set(b):
            m = min(a[atom], b[atom])
            a[atom] -= m
            b[atom] -= m
        return (FactorList._build(a, self.unit_coeff, self.unit_exps, self.gens),
                FactorList._build(b, other.unit_coeff, other.unit_exps, self.gens))

    def apply_to(self, p: LaurentPoly) -> LaurentPoly:
        """Return ``p`` multiplied by this product, one binomial at a time."""
        if self.is_zero:
            return LaurentPoly.zero(self.gens)
        for (c, e), m in sorted(self.atoms.items(), key=lambda kv: _atom_key(kv[0])):
            p = p.mul_binomial(c, e, m)
        return p.shift(self.unit_exps).scale(self.unit_coeff)

    def expand(self) -> LaurentPoly:
        if self._expanded is None:
            self._expanded = self.apply_to(LaurentPoly.const(1, self.gens))
        return self._expanded

    def subs(self, mapping: Mapping[str, LaurentPoly | object]) -> "FactorList":
        """Monomial substitution; raises PoleHit if an atom becomes zero."""
        atoms = []
        unit = self.unit_poly().subs(mapping)
        if not (unit.is_monomial or unit.is_zero):
            raise ValueError("substitution images must be monomials")
        n = len(self.gens)
        uc, ue = (0, (0,) * n) if unit.is_zero else next(iter(unit.items()))[::-1]
        result = FactorList((), (uc, ue), self.gens)
        for (c, e), m in self.atoms.items():
            img = LaurentPoly.monomial(c, e, self.gens).subs(mapping)
            if not img.is_monomial:
                if img.is_zero:
                    continue
                raise ValueError("substitution images must be monomials")
            (e2, c2), = img.items()
            if not any(e2) and c2 == 1:
                raise PoleHit(f"factor 1 - {LaurentPoly.monomial(c, e, self.gens)} vanishes under {mapping}")
            atoms.append(((c2, e2), m))
        return result * FactorList(dict(_merge(atoms)), None, self.gens)

    def evaluate(self, values=None, **kw) -> Coeff:
        vals = dict(values or {}, **kw)
        total = Fraction(self.unit_poly().evaluate(vals))
        for atom, m in self.atoms.items():
            total *= Fraction(self.atom_poly(atom).evaluate(vals)) ** m
        return norm_coeff(total)

    def __eq__(self, other):
        if not isinstance(other, FactorList):
            return NotImplemented
        return (self.gens == other.gens and self.unit_coeff == other.unit_coeff
                and self.unit_exps == other.unit_exps and self.atoms == other.atoms)

    __hash__ = None

    def to_str(self) -> str:
        parts = [self.unit_poly().to_str()]
        for p, m in self:
            parts.append(f"({p.to_str()})" + (f"^{m}" if m != 1 else ""))
        return " * ".join(parts)

    __str__ = to_str

    def __repr__(self):
        return f"FactorList({self.to_str()!r})"


def _atom_key(atom: Atom):
    c, e = atom
    return (e, Fraction(c))


def _merge(pairs):
    out: Counter = Counter()
    for atom, m in pairs:
        out[atom] += m
    return out
