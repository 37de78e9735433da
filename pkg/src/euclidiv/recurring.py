"""Recurring expansions of fractions a/d in base B and their classical identities."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import gcd as int_gcd

from . import arith
from .digits import RecurringNumeral, evaluate_digits, to_digits
from .domain import (
    DomainError,
    Element,
    Kind,
    canonical_residue,
    divide,
    extended_gcd,
    is_prime_element,
    normalize,
    residue_count,
    residues,
    valuation,
)
from .period import multiplicative_order

CHAIN_BUDGET = 10**6
MIDY_SAMPLE = 100


def _require_base_coprime(d: Element, base: Element) -> None:
    if d.tag != base.tag:
        raise DomainError("divisor and base live in different domains")
    if d.is_zero or d.is_unit:
        raise DomainError("divisor must be neither zero nor a unit")
    if not extended_gcd(d, base).g.is_unit:
        raise DomainError("base not invertible")


def expansion_sequence(a: Element, d: Element, base: Element, count: int) -> list[Element]:
    """First ``count`` terms a_1, a_2, ... of a/d = 0.a_1 a_2 ... by long division."""
    if d.is_zero or d.is_unit:
        raise DomainError("divisor must be neither zero nor a unit")
    if not a.is_zero and valuation(a) >= valuation(d):
        raise DomainError("numerator must have smaller valuation than the divisor")
    out = []
    t = a
    for _ in range(count):
        q, t = divide(t * base, d)
        out.append(q)
    return out


def expansion_by_quotients(d: Element, base: Element, count: int) -> list[Element]:
    """Terms of 1/d from whole-power quotients: a_i = [B^i/d] - B[B^(i-1)/d]."""
    out = []
    prev = divide(d.tag.one, d).quotient
    power = d.tag.one
    for _ in range(count):
        power = power * base
        cur = divide(power, d).quotient
        out.append(cur - base * prev)
        prev = cur
    return out


def recurring_expansion(a: Element, d: Element, base: Element, max_steps: int = CHAIN_BUDGET) -> RecurringNumeral:
    """Integer part, preperiod and repetend of a/d, found by remainder repetition."""
    if d.is_zero:
        raise ZeroDivisionError("division by zero")
    whole, t = divide(a, d)
    int_digits = () if whole.is_zero else to_digits(whole, base).digits
    seen: dict = {}
    frac: list[Element] = []
    while t.payload not in seen:
        if len(frac) >= max_steps:
            raise DomainError(f"no repetition within {max_steps} digits")
        seen[t.payload] = len(frac)
        q, t = divide(t * base, d)
        frac.append(q)
    start = seen[t.payload]
    return RecurringNumeral(base, int_digits, tuple(frac[:start]), tuple(frac[start:]))


@dataclass(frozen=True)
class Repetend:
    divisor: Element
    base: Element
    period: int
    value: Element
    digits: tuple[Element, ...]


def repetend(d: Element, base: Element) -> Repetend:
    """The block r_d = (B^e - 1)/d repeated in 1/d, with e the order of B."""
    _require_base_coprime(d, base)
    e = multiplicative_order(base, d)
    value, r = divide(base**e - 1, d)
    if not r.is_zero:
        raise AssertionError("B^e - 1 not divisible by d")
    if canonical_residue(d.tag.one, d) != d.tag.one:
        # only Gaussian divisors of 2: 1 sits on the rounding boundary
        raise DomainError("1/d is not purely periodic under the division convention")
    digits = tuple(expansion_sequence(d.tag.one, d, base, e))
    if evaluate_digits(digits, base) != value:
        raise AssertionError("repetend digits disagree with (B^e - 1)/d")
    return Repetend(d, base, e, value, digits)


def value_of_recurring(rn: RecurringNumeral) -> tuple[Element, Element]:
    """Unreduced fraction (numerator, denominator) of a recurring numeral.

    A pure repetend equal to B^n - 1 evaluates to exactly 1.
    """
    base = rn.base
    one = base.tag.one
    n = rn.period
    rep = evaluate_digits(rn.repetend_digits, base)
    den = base**n - 1
    if not rn.integer_digits and not rn.preperiod_digits:
        if rep == den:
            return one, one
        return rep, den
    k = len(rn.preperiod_digits)
    head = evaluate_digits(rn.integer_digits + rn.preperiod_digits, base)
    num = head * den + rep
    den = base**k * den
    if num == den:
        return one, one
    return num, den


def reduce_fraction(num: Element, den: Element) -> tuple[Element, Element]:
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    g = extended_gcd(num, den).g
    num, den = divide(num, g).quotient, divide(den, g).quotient
    canon = normalize(den)
    unit = divide(canon, den).quotient
    return num * unit, canon


# -- chains --------------------------------------------------------------------------------


def _rotation_key(digits) -> tuple:
    return tuple(a.sort_key() for a in digits)


def canonical_rotation(digits) -> tuple:
    digits = tuple(digits)
    rots = [digits[i:] + digits[:i] for i in range(len(digits))]
    return min(rots, key=_rotation_key)


@dataclass(frozen=True)
class Chain:
    digits: tuple[Element, ...]

    @property
    def length(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class ChainCensus:
    divisor: Element
    base: Element
    entries: tuple[tuple[int, int], ...]
    chains: tuple[Chain, ...]

    @property
    def total(self) -> int:
        return sum(b * c for b, c in self.entries)


def _orbits(d: Element, base: Element, budget: int) -> list[list[Element]]:
    n = residue_count(d)
    if n > budget:
        raise DomainError(f"residue count {n} over budget {budget}")
    tag = d.tag
    if tag.kind is Kind.INTEGERS:
        m, b = abs(d.payload), base.payload % abs(d.payload)
        seen = bytearray(m)
        out = []
        for t in range(m):
            if seen[t]:
                continue
            orbit = []
            x = t
            while not seen[x]:
                seen[x] = 1
                orbit.append(tag(x))
                x = x * b % m
            out.append(orbit)
        return out
    seen_p: set = set()
    out = []
    for t in residues(d):
        if t.payload in seen_p:
            continue
        orbit = []
        x = t
        while x.payload not in seen_p:
            seen_p.add(x.payload)
            orbit.append(x)
            x = canonical_residue(x * base, d)
        out.append(orbit)
    return out


def chains(d: Element, base: Element, budget: int = CHAIN_BUDGET) -> ChainCensus:
    """Orbits of multiplication by B on the residues of d, grouped by length.

    The zero class stands for d/d; over the integers its chain is written
    0.(B-1), elsewhere 0.(0).
    """
    _require_base_coprime(d, base)
    found = []
    for orbit in _orbits(d, base, budget):
        t = orbit[0]
        if t.is_zero and d.tag.kind is Kind.INTEGERS:
            digits = (base - 1,)
        else:
            digits = tuple(expansion_sequence(t, d, base, len(orbit)))
        found.append(Chain(canonical_rotation(digits)))
    found.sort(key=lambda c: (-c.length, _rotation_key(c.digits)))
    tally: dict[int, int] = {}
    for c in found:
        tally[c.length] = tally.get(c.length, 0) + 1
    entries = tuple(sorted(tally.items(), reverse=True))
    return ChainCensus(d, base, entries, tuple(found))


# -- classical identities ----------------------------------------------------------------------


def _digit_string(x: Element, base: Element, width: int) -> tuple:
    digits = () if x.is_zero else to_digits(x, base).digits
    pad = width - len(digits)
    if pad < 0:
        raise AssertionError("value wider than the period")
    return (base.tag.zero,) * pad + digits


@dataclass(frozen=True)
class CyclicReport:
    divisor: Element
    base: Element
    repetend: Repetend
    multiples: tuple[tuple[Element, ...], ...]
    all_rotations: bool
    times_divisor: Element
    all_top_digits: bool

    @property
    def ok(self) -> bool:
        return self.all_rotations and self.all_top_digits


def cyclic_multiples_check(d: Element, base: Element) -> CyclicReport:
    """t * r_d for 1 <= t < d are rotations of r_d when B generates (Z/dZ)^x."""
    if d.tag.kind is not Kind.INTEGERS or not is_prime_element(d):
        raise DomainError("requires a prime integer divisor")
    rep = repetend(d, base)
    if rep.period != abs(d.payload) - 1:
        raise DomainError("requires single chain")
    e = rep.period
    block = _digit_string(rep.value, base, e)
    doubled = block + block
    multiples = []
    rotations = True
    for t in range(1, abs(d.payload)):
        m = _digit_string(rep.value * t, base, e)
        multiples.append(m)
        if not any(doubled[i:i + e] == m for i in range(e)):
            rotations = False
    top = rep.value * d
    return CyclicReport(d, base, rep, tuple(multiples), rotations, top, top == base**e - 1)


@dataclass(frozen=True)
class MidySample:
    numerator: Element
    first_half: tuple[Element, ...]
    second_half: tuple[Element, ...]
    sums: tuple[Element, ...]
    represents: str | None


@dataclass(frozen=True)
class MidyReport:
    divisor: Element
    base: Element
    l: int | None
    samples: tuple[MidySample, ...] = ()

    @property
    def has_witness(self) -> bool:
        return self.l is not None

    @property
    def ok(self) -> bool:
        return all(s.represents is not None for s in self.samples)


def _coprime_residues(d: Element, limit: int, seed: int) -> list[Element]:
    tag = d.tag
    if tag.kind is Kind.INTEGERS:
        m = abs(d.payload)
        pool = [t for t in range(1, m) if int_gcd(t, m) == 1]
        if len(pool) > limit:
            pool = sorted(random.Random(seed).sample(pool, limit))
        return [tag(t) for t in pool]
    pool = [t for t in residues(d) if not t.is_zero and extended_gcd(t, d).g.is_unit]
    if len(pool) > limit:
        pool = sorted(random.Random(seed).sample(pool, limit), key=lambda e: e.sort_key())
    return pool


def midy_complement_check(d: Element, base: Element, sample: int = MIDY_SAMPLE, seed: int = 42) -> MidyReport:
    """If d | B^l + 1, the digit blocks l apart add up to 0.(B-1) = 1 or to 0."""
    _require_base_coprime(d, base)
    tag = d.tag
    if tag.kind is Kind.POLYNOMIAL:
        if tag.characteristic == 2:
            raise DomainError("characteristic 2 excluded")
    elif not extended_gcd(d, base * 2).g.is_unit:
        raise DomainError("divisor must be coprime to 2B")
    e = multiplicative_order(base, d)
    minus_one = canonical_residue(-tag.one, d)
    power = canonical_residue(base, d)
    l = None
    for k in range(1, e + 1):
        if power == minus_one:
            l = k
            break
        power = canonical_residue(power * base, d)
    if l is None:
        return MidyReport(d, base, None)
    target_one = base**l - 1
    out = []
    for a in _coprime_residues(d, sample, seed):
        seq = expansion_sequence(a, d, base, 2 * l)
        first, second = tuple(seq[:l]), tuple(seq[l:])
        sums = tuple(x + y for x, y in zip(first, second))
        total = evaluate_digits(sums, base)
        if total == target_one:
            kind = "one"
        elif total.is_zero:
            kind = "zero"
        else:
            kind = None
        out.append(MidySample(a, first, second, sums, kind))
    return MidyReport(d, base, l, tuple(out))


@dataclass(frozen=True)
class SquareSplitReport:
    multiple: Element
    high: Element
    low: Element
    total: Element
    divisible: bool
    quotient: Element
    predicted_quotient: Element
    degenerate: bool

    @property
    def ok(self) -> bool:
        return self.divisible and self.quotient == self.predicted_quotient


def square_split_check(d: Element, base: Element, k: int | Element, l: int) -> SquareSplitReport:
    """Split k*r_d after its l*e lowest digits and add the two parts; r_d divides the sum."""
    if l < 1:
        raise DomainError("l must be positive")
    rep = repetend(d, base)
    e = rep.period
    k = k if isinstance(k, Element) else d.tag(k)
    kr = k * rep.value
    shift = base ** (l * e)
    high, low = divide(kr, shift)
    total = high + low
    quotient, rem = divide(total, rep.value)
    geometric = sum((base ** (j * e) for j in range(l)), d.tag.zero)
    predicted = k - d * high * geometric
    return SquareSplitReport(kr, high, low, total, rem.is_zero, quotient, predicted, high.is_zero)


@dataclass(frozen=True)
class UnityReport:
    base: Element
    found: bool
    witness: tuple[Element, ...] | None
    periods_searched: tuple[int, ...]
    strings_examined: int
    complete: bool
    method: str


def _digit_alphabet(base: Element) -> list[Element]:
    tag = base.tag
    v = valuation(base)
    if tag.kind is Kind.INTEGERS:
        return [tag(a) for a in range(-v + 1, v)]
    if tag.kind is Kind.POLYNOMIAL:
        p = tag.characteristic
        return [tag(list(c)) for c in itertools.product(range(p), repeat=v)]
    r = int(v**0.5) + 1
    return [tag((a, b)) for a in range(-r, r + 1) for b in range(-r, r + 1) if a * a + b * b < v]


def unity_recurring_witness(base: Element, max_period: int = 3, budget: int = 10**6) -> UnityReport:
    """Look for 1 = 0.(a_1 ... a_n) with every a_i a digit of ``base``.

    Integer bases B >= 2 have the witness 0.(B-1); everything else is an
    exhaustive search over digit strings of length <= max_period.
    """
    if base.is_zero or base.is_unit:
        raise DomainError("invalid base")
    tag = base.tag
    if tag.kind is Kind.INTEGERS and base.payload >= 2:
        w = (base - 1,)
        value = value_of_recurring(RecurringNumeral(base, (), (), w))
        if value != (tag.one, tag.one):
            raise AssertionError("0.(B-1) does not evaluate to 1")
        return UnityReport(base, True, w, (1,), 1, True, "closed form")
    alphabet = _digit_alphabet(base)
    examined = 0
    searched = []
    for n in range(1, max_period + 1):
        target = base**n - 1
        if examined + len(alphabet) ** n > budget:
            return UnityReport(base, False, None, tuple(searched), examined, False, "exhaustive")
        for digits in itertools.product(alphabet, repeat=n):
            examined += 1
            if evaluate_digits(digits, base) == target:
                return UnityReport(base, True, digits, tuple(searched) + (n,), examined, True, "exhaustive")
        searched.append(n)
    return UnityReport(base, False, None, tuple(searched), examined, True, "exhaustive")


@dataclass(frozen=True)
class SamePeriodReport:
    primes: tuple[Element, ...]
    base: Element
    prime_orders: tuple[int, ...]
    order: int
    lcm: int
    divisor_orders: dict = field(default_factory=dict)

    @property
    def lcm_ok(self) -> bool:
        return self.order == self.lcm

    @property
    def all_same(self) -> bool:
        return len(set(self.prime_orders)) == 1

    @property
    def ok(self) -> bool:
        if not self.lcm_ok:
            return False
        if self.all_same:
            return all(o == self.order for o in self.divisor_orders.values())
        return True


def same_period_for_divisors_check(primes, base: Element) -> SamePeriodReport:
    """Order of B mod a squarefree d is the lcm of the prime orders; equal prime orders pass to every divisor."""
    primes = tuple(primes)
    if len({normalize(p) for p in primes}) != len(primes):
        raise DomainError("primes must be distinct")
    for p in primes:
        if not is_prime_element(p):
            raise DomainError(f"{p} is not prime")
        _require_base_coprime(p, base)
    orders = tuple(multiplicative_order(base, p) for p in primes)
    d = base.tag.one
    for p in primes:
        d = d * p
    divisor_orders = {}
    for r in range(1, len(primes) + 1):
        for subset in itertools.combinations(primes, r):
            dd = base.tag.one
            for p in subset:
                dd = dd * p
            divisor_orders[str(dd)] = multiplicative_order(base, dd)
    return SamePeriodReport(primes, base, orders, multiplicative_order(base, d), arith.lcm(*orders), divisor_orders)
