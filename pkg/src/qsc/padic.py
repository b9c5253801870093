"""Integer supercongruences at prime powers, decided by p-adic valuation."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotPrime
from .qkit import is_prime
from .report import FAIL, PASS

COR42, COR44 = "cor42", "cor44"
HALF, FULL = "half", "full"


def padic_val(x, p: int) -> int | float:
    """v_p(x) for a rational x; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicClaim:
    p: int
    r: int
    family: str
    variant: str
    modulus_exponent: int | None = None

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise NotPrime(f"{self.p} is not an odd prime")
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.family not in (COR42, COR44):
            raise ValueError(f"unknown family {self.family!r}")
        if self.variant not in (HALF, FULL):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.modulus_exponent is None:
            object.__setattr__(self, "modulus_exponent", self.default_exponent)

    @property
    def default_exponent(self) -> int:
        return 4 * self.r + 1 if self.family == COR42 else 2 * self.r + 1

    @property
    def target(self) -> Fraction:
        pr = self.p ** self.r
        return Fraction(1 - 5 * pr ** 4) if self.family == COR42 else Fraction(1 - pr ** 2)

    @property
    def upper(self) -> int:
        pr = self.p ** self.r
        return (pr - 1) // 2 if self.variant == HALF else pr - 2


def corollary_sum(claim: PadicClaim) -> Fraction:
    """Exact partial sum; the central binomial is updated incrementally."""
    power = 4 if claim.family == COR42 else 2
    scale, base = (16, 256) if claim.family == COR42 else (4, 16)
    total = Fraction(0)
    binom = 1
    for k in range(claim.upper + 1):
        if k:
            binom = binom * 2 * (2 * k - 1) // k
        total += Fraction((4 * k + 3) * binom ** power, scale * (k + 1) ** power * base ** k)
    return total


@dataclass
class PadicReport:
    claim: PadicClaim
    verdict: str
    sum_value: Fraction
    valuation_found: int | float
    denominator_valuation: int = 0
    elapsed_ms: float | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self):
        return self.passed

    @property
    def valuation_required(self) -> int:
        return self.claim.modulus_exponent

    def to_json(self) -> dict:
        c = self.claim
        found = self.valuation_found
        return {"p": c.p, "r": c.r, "family": c.family, "variant": c.variant, "verdict": self.verdict,
                "valuation_found": None if found == math.inf else found,
                "valuation_required": self.valuation_required, "elapsed_ms": self.elapsed_ms}


def verify_padic(claim: PadicClaim) -> PadicReport:
    t0 = time.perf_counter()
    s = corollary_sum(claim)
    diff = s - claim.target
    v = padic_val(diff, claim.p)
    dv = padic_val(s.denominator, claim.p)
    ok = v >= claim.modulus_exponent and dv == 0
    rep = PadicReport(claim, PASS if ok else FAIL, s, v, dv, round((time.perf_counter() - t0) * 1000, 3))
    if ok and v > claim.modulus_exponent:
        rep.notes.append(f"valuation {v} exceeds the required {claim.modulus_exponent}")
    if dv:
        rep.notes.append("sum has p in its denominator")
    return rep
