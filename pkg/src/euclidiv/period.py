"""Multiplicative orders and how they grow along prime powers.

For a prime ``p`` coprime to the base, ``q_n`` is the order of ``B`` modulo
``p**n``.  Consecutive orders are equal or differ by the factor ``p'``, the
rational prime lying under ``p``, and past a threshold index ``g`` they grow
like ``q_{g+n} = p'**ceil(n/f) * q_g`` where ``f`` is the exponent of ``p`` in
``p'``.  Every prediction from that formula is checked against a direct
order computation; a disagreement raises :class:`PeriodLiftingMismatch`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from . import arith
from .domain import (
    DomainError,
    Element,
    Kind,
    canonical_residue,
    divide,
    element_valuation_at,
    extended_gcd,
    factor,
    is_prime_element,
    residue_count,
    valuation,
)

ORDER_BUDGET = 10**7
BRUTE_FORCE_CROSSCHECK = 10**5


class PeriodLiftingMismatch(ArithmeticError):
    pass


def _require_coprime(b: Element, d: Element) -> None:
    if b.tag != d.tag:
        raise DomainError("base and modulus live in different domains")
    if d.is_zero or d.is_unit:
        raise DomainError("modulus must be neither zero nor a unit")
    if not extended_gcd(b, d).g.is_unit:
        raise DomainError("base not invertible")


def brute_force_order(b: Element, d: Element, budget: int = ORDER_BUDGET) -> int:
    """Order by repeated multiplication; the independent slow route."""
    _require_coprime(b, d)
    one = canonical_residue(d.tag.one, d)
    step = canonical_residue(b, d)
    cur, e = step, 1
    while cur != one:
        if e >= budget:
            raise DomainError(f"order search exceeded {budget} steps")
        cur = canonical_residue(cur * step, d)
        e += 1
    return e


def _order_with_group(b: Element, d: Element, group: int, group_factors: dict[int, int]) -> int:
    one = canonical_residue(d.tag.one, d)
    e = group
    for q in group_factors:
        while e % q == 0 and pow(b, e // q, d) == one:
            e //= q
    return e


def _unit_group(factors: list[tuple[Element, int]]) -> tuple[int, dict[int, int]]:
    """Order of (E/dE)^x for d = prod p^a, with its factorization."""
    total = 1
    fac: dict[int, int] = {}
    for p, a in factors:
        n = residue_count(p)
        total *= n ** (a - 1) * (n - 1)
        for q, c in arith.factorint(n).items():
            if a > 1:
                fac[q] = fac.get(q, 0) + c * (a - 1)
        for q, c in arith.factorint(n - 1).items():
            fac[q] = fac.get(q, 0) + c
    return total, fac


def multiplicative_order(b: Element, d: Element, budget: int = ORDER_BUDGET) -> int:
    """Least e >= 1 with b**e = 1 mod d.

    Integers and Gaussian integers strip prime factors from the order of
    the unit group; polynomial moduli fall back to repeated multiplication.
    """
    _require_coprime(b, d)
    k = d.tag.kind
    if k is Kind.INTEGERS:
        return arith.int_order(b.payload, d.payload)
    if k is Kind.GAUSSIAN:
        group, fac = _unit_group(factor(d))
        return _order_with_group(canonical_residue(b, d), d, group, fac)
    return brute_force_order(b, d, budget)


def prime_integer_below(p: Element) -> tuple[int, int]:
    """The rational prime p' with p | p', and f = exponent of p in p'."""
    k = p.tag.kind
    if k is Kind.POLYNOMIAL:
        raise DomainError("no prime integer exists below a polynomial prime")
    if not is_prime_element(p):
        raise DomainError(f"{p} is not prime")
    if k is Kind.INTEGERS:
        return abs(p.payload), 1
    n = valuation(p)
    q = n if arith.is_prime(n) else arith.factorint(n).popitem()[0]
    return q, element_valuation_at(p.tag(q), p)


@dataclass(frozen=True)
class LteReport:
    a_m: Element
    prime_integer: int
    f: int
    p_divides: bool
    p_prime_divides_m: bool
    valuation_clause: bool
    valuation: int | None
    expected_valuation: int | None

    @property
    def ok(self) -> bool:
        if self.p_divides != self.p_prime_divides_m:
            return False
        return not self.valuation_clause or self.valuation == self.expected_valuation


def lte_check(x: Element, y: Element, m: int, p: Element) -> LteReport:
    """Check the lifting-the-exponent statement on one instance.

    With a(m) = (x^m - y^m)/(x - y), ``p | a(m)`` iff ``p' | m``; and when
    ``v_p(x - y) > floor(f/(p'-1))`` also ``v_p(a(m)) = f * v_p'(m)``.
    """
    if m < 1:
        raise DomainError("m must be positive")
    if x == y:
        raise DomainError("x and y must differ")
    if x.tag.kind is Kind.POLYNOMIAL:
        raise DomainError("lifting the exponent needs a prime integer below p")
    diff = x - y
    if not divide(diff, p).remainder.is_zero:
        raise DomainError("p must divide x - y")
    if divide(y, p).remainder.is_zero:
        raise DomainError("p must not divide y")
    pp, f = prime_integer_below(p)
    a_m, r = divide(x**m - y**m, diff)
    assert r.is_zero
    divides = divide(a_m, p).remainder.is_zero
    clause = element_valuation_at(diff, p) > f // (pp - 1)
    v = element_valuation_at(a_m, p) if clause else None
    expected = f * arith.int_valuation(m, pp) if clause else None
    return LteReport(a_m, pp, f, divides, m % pp == 0, clause, v, expected)


@dataclass(frozen=True)
class PrimePowerPeriod:
    prime: Element
    base: Element
    prime_integer: int
    f: int
    g: int
    q: tuple[int, ...]
    q_formula: tuple[int, ...]

    def predicted(self, n: int) -> int:
        """q_n from the lifting formula, valid for n >= g."""
        if n < self.g:
            raise ValueError("the formula only covers n >= g")
        return self.prime_integer ** ceil((n - self.g) / self.f) * self.q[self.g - 1]


def _prime_power_order(b: Element, p: Element, n: int, pp: int) -> int:
    modulus = p**n
    if b.tag.kind is Kind.INTEGERS:
        pi = abs(p.payload)
        fac = arith.factorint(pi - 1)
        if n > 1:
            fac[pi] = fac.get(pi, 0) + n - 1
        group = pi ** (n - 1) * (pi - 1)
        return arith.order_from_multiple(b.payload % (pi**n), pi**n, group, fac)
    group, fac = _unit_group([(p, n)])
    e = _order_with_group(canonical_residue(b, modulus), modulus, group, fac)
    if residue_count(modulus) <= BRUTE_FORCE_CROSSCHECK:
        slow = brute_force_order(b, modulus)
        if slow != e:
            raise PeriodLiftingMismatch(f"order mod {p}^{n}: group stripping {e}, brute force {slow}")
    return e


def prime_power_period(p: Element, alpha_max: int, b: Element, level_cap: int = 64) -> PrimePowerPeriod:
    """Orders q_1, q_2, ... of ``b`` modulo powers of ``p``, cross-checked.

    At least ``alpha_max`` levels are computed, and more when the threshold
    g needs them; ``q`` holds every computed level.
    """
    if alpha_max < 1:
        raise ValueError("alpha_max must be positive")
    if p.tag.kind is Kind.POLYNOMIAL:
        raise DomainError("prime-power lifting needs a prime integer below p")
    _require_coprime(b, p)
    pp, f = prime_integer_below(p)
    q: list[int] = []
    g = None
    n = 0
    while n < alpha_max or g is None:
        n += 1
        if n > alpha_max + level_cap:
            raise DomainError("threshold g not reached within the level cap")
        q.append(_prime_power_order(b, p, n, pp))
        if n >= 2:
            prev, cur = q[-2], q[-1]
            if cur not in (prev, pp * prev):
                raise PeriodLiftingMismatch(f"q_{n} = {cur} is neither q_{n-1} nor {pp}*q_{n-1}")
            if g is None and (n - 1) * (pp - 1) > f and cur == pp * prev:
                g = n - 1
    result = PrimePowerPeriod(p, b, pp, f, g, tuple(q), ())
    formula = tuple(result.predicted(k) for k in range(g, len(q) + 1))
    for k, val in zip(range(g, len(q) + 1), formula):
        if q[k - 1] != val:
            raise PeriodLiftingMismatch(f"q_{k}: direct {q[k - 1]}, formula {val}")
    return PrimePowerPeriod(p, b, pp, f, g, tuple(q), formula)


@dataclass(frozen=True)
class FactorPeriod:
    prime: Element
    alpha: int
    period: int
    lifting: PrimePowerPeriod | None


@dataclass(frozen=True)
class PeriodResult:
    divisor: Element
    base: Element
    period: int
    per_prime: tuple[FactorPeriod, ...]


def period_of_d(d: Element, b: Element) -> PeriodResult:
    """Period of 1/d in base b as the lcm of the prime-power periods."""
    _require_coprime(b, d)
    parts = []
    for p, alpha in factor(d):
        if d.tag.kind is Kind.POLYNOMIAL:
            parts.append(FactorPeriod(p, alpha, brute_force_order(b, p**alpha), None))
        else:
            lift = prime_power_period(p, alpha, b)
            parts.append(FactorPeriod(p, alpha, lift.q[alpha - 1], lift))
    return PeriodResult(d, b, arith.lcm(*(fp.period for fp in parts)), tuple(parts))
