"""q-integers, q-shifted factorials, Gaussian binomials and cyclotomic polynomials."""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from .ring import FactorList, LaurentPoly, RatFun

q = LaurentPoly.gen("q")
ONE = LaurentPoly.const(1)


def q_int(n: int) -> LaurentPoly:
    """[n] = (1 - q^n)/(1 - q); for negative n this is -q^n [-n]."""
    if n >= 0:
        return LaurentPoly({(j, 0): 1 for j in range(n)})
    return LaurentPoly({(j, 0): -1 for j in range(n, 0)})


def q_int_rf(n: int) -> RatFun:
    """[n] as (1 - q^n)/(1 - q), so that it can also sit in a denominator."""
    if n == 0:
        return RatFun(LaurentPoly.zero())
    return RatFun(ONE - q ** n if n > 0 else ONE - LaurentPoly.monomial(1, (n, 0)),
                  FactorList({(1, (1, 0)): 1}))


def q_pochhammer(c, e_q: int, e_a: int, step: int, k: int) -> FactorList:
    """(c q^e_q a^e_a ; q^step)_k as a factor list."""
    if step <= 0:
        raise ValueError("step must be positive")
    if k < 0:
        raise ValueError("negative length")
    return FactorList([(c, (e_q + j * step, e_a)) for j in range(k)])


def q_binom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial coefficient; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    k = min(k, n - k)
    # q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j], rows truncated at j <= k
    row = [[1]]
    for m in range(1, n + 1):
        new = []
        for j in range(min(m, k) + 1):
            left = row[j - 1] if j >= 1 else []
            right = row[j] if j < len(row) and j < m else []
            coeffs = [0] * max(len(left), len(right) + j)
            for i, c in enumerate(left):
                coeffs[i] += c
            for i, c in enumerate(right):
                coeffs[i + j] += c
            new.append(coeffs)
        row = new
    return LaurentPoly.from_dense(0, row[k])


def q_binom_base(n: int, k: int, base_power: int) -> LaurentPoly:
    """Gaussian binomial in base q^base_power."""
    return q_binom(n, k).subs({"q": q ** base_power})


class CyclotomicCache:
    """Memoized cyclotomic polynomials, optionally persisted to a JSON file.

    Population is serialized by a lock; readers only ever see complete entries.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self._data: dict[int, LaurentPoly] = {}
        self._lock = threading.RLock()
        self._path = Path(directory) / "cyclotomic.json" if directory else None
        if self._path is not None and self._path.exists():
            try:
                raw = json.loads(self._path.read_text())
            except (OSError, ValueError):
                raw = {}
            for key, coeffs in raw.items():
                self._data[int(key)] = LaurentPoly.from_dense(0, coeffs)

    def __contains__(self, n: int) -> bool:
        return n in self._data

    def __len__(self):
        return len(self._data)

    def get(self, n: int) -> LaurentPoly:
        if n < 1:
            raise ValueError("cyclotomic index must be positive")
        p = self._data.get(n)
        if p is not None:
            return p
        with self._lock:
            p = self._data.get(n)
            if p is None:
                p = self._compute(n)
                self._data[n] = p
                self._persist()
            return p

    def _compute(self, n: int) -> LaurentPoly:
        acc = q ** n - 1
        for d in divisors(n)[:-1]:
            acc = acc.div_exact(self.get(d))
        return acc

    def _persist(self):
        if self._path is None:
            return
        payload = {str(k): v.to_dense(0)[1] for k, v in sorted(self._data.items())}
        tmp = self._path.with_suffix(".tmp")
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            tmp.write_text(json.dumps(payload))
            os.replace(tmp, self._path)
        except OSError:
            pass


_CACHE = CyclotomicCache(os.environ.get("QSC_CACHE_DIR"))


def cyclotomic(n: int) -> LaurentPoly:
    """Phi_n(q) by exact division of q^n - 1 by the smaller cyclotomics."""
    return _CACHE.get(n)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def cyclotomic_indices(c, e: int) -> list[int]:
    """Indices d with Phi_d dividing 1 - c*q^e, for c = +1 or -1 and e > 0."""
    if e <= 0 or c not in (1, -1):
        raise ValueError("only 1 - q^e and 1 + q^e split into cyclotomics here")
    if c == 1:
        return divisors(e)
    return [d for d in divisors(2 * e) if e % d]
