"""Prime statistics for base-B periods.

Primes coprime to ``2B`` are sorted into three classes by the period of
``1/p``: full period (``B`` is a primitive root), odd period, and even but
not full.  The heavy lifting is a segmented numpy sieve plus one modular
exponentiation per prime factor of ``p - 1``.
"""

from __future__ import annotations

import enum
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from . import arith

SIEVE_CAP = 10**8
SPF_CAP = 10**7
SEGMENT_SIZE = 1 << 18
ARTIN = Decimal("0.3739558136192")
KVANT_RATIO = (Fraction(9, 24), Fraction(8, 24), Fraction(7, 24))
_SCALE = 10**40


class PrimeClass(enum.Enum):
    FULL = "full"
    ODD = "odd"
    EVEN_NONFULL = "even_nonfull"


def _small_primes(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def _sieve_segment(lo: int, hi: int, base_primes: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi)."""
    flags = np.ones(hi - lo, dtype=bool)
    for p in base_primes:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        flags[start - lo :: p] = False
    if lo < 2:
        flags[: 2 - lo] = False
    return np.flatnonzero(flags) + lo


def _segments(limit: int, size: int):
    for lo in range(0, limit + 1, size):
        yield lo, min(lo + size, limit + 1)


def sieve_primes(limit: int, segment_size: int = SEGMENT_SIZE) -> np.ndarray:
    """All primes up to ``limit`` in ascending order, one segment at a time."""
    if limit > SIEVE_CAP:
        raise ValueError(f"limit exceeds the sieve cap {SIEVE_CAP}")
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    base = _small_primes(isqrt(limit) + 1)
    parts = [_sieve_segment(lo, hi, base) for lo, hi in _segments(limit, segment_size)]
    return np.concatenate(parts).astype(np.int64)


def _spf_table(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.flatnonzero(spf == 0)
    spf[idx] = idx
    return spf


class _Factorizer:
    """Prime factors of p - 1, by smallest-prime-factor lookup when it fits."""

    def __init__(self, limit: int):
        self.spf = _spf_table(limit) if limit <= SPF_CAP else None

    def primes_of(self, n: int) -> list[int]:
        if self.spf is None:
            return list(arith.factorint(n))
        out = []
        while n > 1:
            q = int(self.spf[n])
            out.append(q)
            while n % q == 0:
                n //= q
        return out


def _check_included(p: int, base: int) -> None:
    if base % p == 0 or p == 2:
        raise ValueError("excluded prime")


def classify_prime(p: int, base: int, factorizer: _Factorizer | None = None) -> PrimeClass:
    """Class of ``p`` without computing the full order.

    With ``p - 1 = 2**s * t``, the period is odd iff ``B**t == 1``; it is
    full iff ``B**((p-1)/q) != 1`` for every prime ``q | p - 1``.
    """
    _check_included(p, base)
    b = base % p
    t = p - 1
    while t % 2 == 0:
        t //= 2
    if pow(b, t, p) == 1:
        return PrimeClass.ODD
    qs = factorizer.primes_of(p - 1) if factorizer else list(arith.factorint(p - 1))
    if all(pow(b, (p - 1) // q, p) != 1 for q in qs):
        return PrimeClass.FULL
    return PrimeClass.EVEN_NONFULL


def _prime_order(p: int, base: int, factorizer: _Factorizer | None) -> int:
    qs = factorizer.primes_of(p - 1) if factorizer else list(arith.factorint(p - 1))
    return arith.order_from_multiple(base % p, p, p - 1, {q: arith.int_valuation(p - 1, q) for q in qs})


@dataclass(frozen=True)
class DensityReferences:
    full: Fraction | Decimal | None
    odd: Fraction | None
    even_nonfull: Decimal | None
    grh_conditional: bool = True


def _squarefree_part(n: int) -> int:
    out = 1
    for q, e in arith.factorint(n).items():
        if e % 2:
            out *= q
    return out


def _is_perfect_power(n: int) -> bool:
    g = 0
    for e in arith.factorint(n).values():
        g = gcd(g, e)
    return g > 1


def density_references(base: int) -> DensityReferences:
    """Heuristic class densities for ``base``.

    The odd-period share 1/3 is withheld for ``u**2`` and ``2*u**2``.  Artin's
    constant is attached only where it is the plain prediction: ``base`` not a
    perfect power and its squarefree part not ``1 mod 4``.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    odd_excluded = arith.is_square(base) or (base % 2 == 0 and arith.is_square(base // 2))
    odd = None if odd_excluded else Fraction(1, 3)
    plain_artin = not _is_perfect_power(base) and _squarefree_part(base) % 4 != 1
    full = ARTIN if plain_artin else None
    even = Decimal(2) / Decimal(3) - ARTIN if (odd is not None and full is not None) else None
    return DensityReferences(full, odd, even)


@dataclass(frozen=True)
class CensusReport:
    base: int
    limit: int
    counts: dict
    excluded: int
    references: DensityReferences

    @property
    def included(self) -> int:
        return sum(self.counts.values())

    @property
    def proportions(self) -> dict:
        n = self.included
        return {c: Fraction(v, n) if n else Fraction(0) for c, v in self.counts.items()}

    @property
    def deltas(self) -> dict:
        """Proportion minus reference, against the heuristic and against 9:8:7."""
        refs = {
            PrimeClass.FULL: self.references.full,
            PrimeClass.ODD: self.references.odd,
            PrimeClass.EVEN_NONFULL: self.references.even_nonfull,
        }
        out = {}
        for (cls, prop), kvant in zip(self.proportions.items(), KVANT_RATIO):
            ref = refs[cls]
            out[cls] = {
                "reference": None if ref is None else float(prop) - float(ref),
                "ratio_9_8_7": float(prop - kvant),
            }
        return out


@lru_cache(maxsize=2)
def _base_primes(limit: int) -> np.ndarray:
    return _small_primes(isqrt(limit) + 1)


@lru_cache(maxsize=2)
def _factorizer(limit: int) -> _Factorizer:
    return _Factorizer(limit)


def _count_segment(args) -> tuple[int, int, int, int]:
    lo, hi, base, limit = args
    fac = _factorizer(limit)
    tally = dict.fromkeys(PrimeClass, 0)
    excluded = 0
    for p in _sieve_segment(lo, hi, _base_primes(limit)).tolist():
        if p == 2 or base % p == 0:
            excluded += 1
        else:
            tally[classify_prime(p, base, fac)] += 1
    return tally[PrimeClass.FULL], tally[PrimeClass.ODD], tally[PrimeClass.EVEN_NONFULL], excluded


def census(limit: int, base: int, segment_size: int = SEGMENT_SIZE, workers: int = 1) -> CensusReport:
    """Count included primes up to ``limit`` by class.

    Segments are independent and merge by addition, so the report does not
    depend on ``segment_size`` or ``workers``.
    """
    if limit < 100:
        raise ValueError("limit must be at least 100")
    if limit > SIEVE_CAP:
        raise ValueError(f"limit exceeds the sieve cap {SIEVE_CAP}")
    if base < 2:
        raise ValueError("base must be at least 2")
    jobs = [(lo, hi, base, limit) for lo, hi in _segments(limit, segment_size)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_count_segment, jobs))
    else:
        parts = [_count_segment(j) for j in jobs]
    full, odd, even, excluded = (sum(col) for col in zip(*parts))
    counts = {PrimeClass.FULL: full, PrimeClass.ODD: odd, PrimeClass.EVEN_NONFULL: even}
    return CensusReport(base, limit, counts, excluded, density_references(base))


@dataclass(frozen=True)
class ArtinEstimate:
    """Truncated product over primes <= ``prime_limit`` with a certified bracket.

    ``value`` is the truncated product (rounded up); the constant lies in
    ``[value - error_bound, value]``.
    """

    prime_limit: int
    lower: Decimal
    upper: Decimal

    @property
    def value(self) -> Decimal:
        return self.upper

    @property
    def error_bound(self) -> Decimal:
        return self.upper - self.lower

    def __iter__(self):
        yield self.value
        yield self.error_bound


def artin_constant(prime_limit: int) -> ArtinEstimate:
    """Artin's constant from the product of ``1 - 1/(p(p-1))``.

    The partial product is kept in integer fixed point with floor and
    ceiling tracks.  The remaining factors lie in ``[1 - 1/N, 1]`` because
    the tail sum of ``1/(n(n-1))`` over ``n > N`` is ``1/N``.
    """
    if prime_limit < 2:
        raise ValueError("prime_limit must be at least 2")
    lo = hi = _SCALE
    for p in sieve_primes(prime_limit).tolist():
        den = p * (p - 1)
        lo = lo * (den - 1) // den
        hi = -(-hi * (den - 1) // den)
    n = prime_limit
    lo_tail = lo * (n - 1) // n
    with localcontext() as ctx:
        ctx.prec = 60
        return ArtinEstimate(prime_limit, Decimal(lo_tail) / _SCALE, Decimal(hi) / _SCALE)


@dataclass(frozen=True)
class ResidualIndexHistogram:
    """``buckets[m]`` counts primes with index m; key ``None`` gathers m > max_m."""

    base: int
    limit: int
    max_m: int
    buckets: dict

    @property
    def total(self) -> int:
        return sum(self.buckets.values())


def residual_index_histogram(limit: int, base: int, max_m: int) -> ResidualIndexHistogram:
    """Histogram of ``c_p = (p - 1)/D_p`` over included primes."""
    if limit < 100:
        raise ValueError("limit must be at least 100")
    if max_m < 1:
        raise ValueError("max_m must be positive")
    fac = _factorizer(limit)
    buckets: dict = {m: 0 for m in range(1, max_m + 1)}
    buckets[None] = 0
    for p in sieve_primes(limit).tolist():
        if p == 2 or base % p == 0:
            continue
        period = _prime_order(p, base, fac)
        index, rem = divmod(p - 1, period)
        if rem or index * period != p - 1:
            raise AssertionError(f"period {period} does not divide {p - 1}")
        buckets[index if index <= max_m else None] += 1
    return ResidualIndexHistogram(base, limit, max_m, buckets)


def wieferich_search(limit: int, base: int, crosscheck: int = 100, seed: int = 42) -> list[int]:
    """Primes ``p`` with ``B**(p-1) == 1 mod p**2``.

    Each hit, and ``crosscheck`` seeded non-hits, is confirmed through the
    equivalent statement that the orders modulo p and p**2 agree.
    """
    if limit > SIEVE_CAP:
        raise ValueError(f"limit exceeds the sieve cap {SIEVE_CAP}")
    hits, misses = [], []
    for p in sieve_primes(limit).tolist():
        if base % p == 0:
            continue
        (hits if pow(base, p - 1, p * p) == 1 else misses).append(p)
    rng = random.Random(seed)
    sample = rng.sample(misses, min(crosscheck, len(misses)))
    for p in hits + sample:
        same = arith.int_order(base, p) == arith.int_order(base, p * p)
        if same != (p in hits):
            raise AssertionError(f"order criterion disagrees at p={p}")
    return hits
