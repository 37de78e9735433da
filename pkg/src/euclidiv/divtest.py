"""Divisibility tests by weighted digit sums.

The forward test weights digits right to left by powers of k = B mod d.
The reverse test weights them left to right by powers of k = B^-1 mod d,
so ``s_m + s_(m-1) k + ... + s_0 k^m`` is divisible by d exactly when s is
(for d coprime to B).  Chunked variants group digits into blocks first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import ceil

from . import arith
from .digits import evaluate_digits, to_digits
from .domain import (
    DomainError,
    Element,
    Kind,
    NotInvertibleError,
    canonical_residue,
    crt,
    divide,
    element_valuation_at,
    extended_gcd,
    factor,
    minimal_representative,
    mod_inverse,
    valuation,
)


class Direction(enum.Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


@dataclass(frozen=True)
class KValue:
    divisor: Element
    base: Element
    direction: Direction
    value: Element


@dataclass(frozen=True)
class DivisibilityVerdict:
    """``reduced_value`` is the first weighted sum; ``trail`` lists any further reductions."""

    divisible: bool
    residue: Element
    reduced_value: Element
    k: Element | None = None
    trail: tuple[Element, ...] = ()
    parts: tuple = field(default=())


def _require_modulus(d: Element, base: Element) -> None:
    if d.tag != base.tag:
        raise DomainError("divisor and base live in different domains")
    if d.is_zero or d.is_unit:
        raise DomainError("divisor must be neither zero nor a unit")


def _require_coprime(d: Element, base: Element) -> None:
    _require_modulus(d, base)
    if not extended_gcd(d, base).g.is_unit:
        raise DomainError("base not invertible")


def forward_k(d: Element, base: Element) -> KValue:
    _require_modulus(d, base)
    return KValue(d, base, Direction.FORWARD, minimal_representative(base, d))


def reverse_k(d: Element, base: Element) -> KValue:
    _require_modulus(d, base)
    try:
        inverse = mod_inverse(base, d)
    except NotInvertibleError as exc:
        raise DomainError("base not invertible") from exc
    return KValue(d, base, Direction.REVERSE, minimal_representative(inverse, d))


def _verdict(d: Element, reduced: Element, k: Element, trail=(), scale: Element | None = None) -> DivisibilityVerdict:
    final = trail[-1] if trail else reduced
    residue = canonical_residue(final if scale is None else final * scale, d)
    return DivisibilityVerdict(residue.is_zero, residue, reduced, k, tuple(trail))


def _weighted_sum(digits, k: Element) -> Element:
    """sum s_j k^j with digits given most significant first."""
    acc = k.tag.zero
    for a in digits:
        acc = acc * k + a
    return acc


def _size(e: Element) -> int:
    return 0 if e.is_zero else valuation(e)


def forward_reduce(s: Element, d: Element, base: Element) -> DivisibilityVerdict:
    """Replace B by k = B mod d, then repeat on the result.

    Repetition stops once the value has no more digits than d, or once a
    step fails to lower its valuation.
    """
    k = forward_k(d, base).value
    width_d = len(to_digits(d, base))
    value = _weighted_sum(to_digits(s, base).digits, k)
    trail = [value]
    while not value.is_zero and len(to_digits(value, base)) > width_d:
        nxt = _weighted_sum(to_digits(value, base).digits, k)
        if _size(nxt) >= _size(value):
            break
        value = nxt
        trail.append(value)
    return _verdict(d, trail[0], k, trail)


def reverse_reduce(s: Element, d: Element, base: Element) -> DivisibilityVerdict:
    """alpha = sum s_j k^(m-j) with k = B^-1; s = B^m alpha mod d."""
    k = reverse_k(d, base).value
    digits = to_digits(s, base).digits
    alpha = evaluate_digits(digits[::-1], k)
    m = len(digits) - 1
    return _verdict(d, alpha, k, scale=pow(base, m, d))


def _check_cuts(cuts, m: int) -> tuple[int, ...]:
    cuts = tuple(cuts)
    if not cuts:
        raise DomainError("invalid cuts: need at least one cut")
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise DomainError("invalid cuts: must be strictly increasing")
    if cuts[0] <= 0 or cuts[-1] >= m:
        raise DomainError(f"invalid cuts: need 0 < n_1 and n_l < {m}")
    return cuts


def chunked_reduce(s: Element, d: Element, base: Element, cuts) -> DivisibilityVerdict:
    """Split the digits at positions n_1 < ... < n_l and weight block i by k^(n_l - n_i).

    Block weights are replaced by their minimal representatives mod d, so for
    7 in base 10 with blocks of three digits the weights become +1 and -1.
    """
    k = reverse_k(d, base).value
    digits = to_digits(s, base).digits
    m = len(digits) - 1
    cuts = _check_cuts(cuts, m)
    low_first = digits[::-1]
    bounds = (0,) + cuts + (m + 1,)
    top = cuts[-1]
    alpha = d.tag.zero
    blocks = []
    for lo, hi in zip(bounds, bounds[1:]):
        block = evaluate_digits(low_first[lo:hi][::-1], base)
        weight = minimal_representative(k ** (top - lo), d) if lo < top else d.tag.one
        blocks.append((block, weight))
        alpha = alpha + weight * block
    verdict = _verdict(d, alpha, k, scale=pow(base, top, d))
    return DivisibilityVerdict(verdict.divisible, verdict.residue, alpha, k, (), tuple(reversed(blocks)))


@dataclass(frozen=True)
class KProgression:
    a: Element
    base: Element
    k_a: Element
    l: Element

    def divisor(self, m) -> Element:
        return self.a + self.base * m

    def predict(self, m) -> Element:
        """k-value of a + m*B as its minimal representative."""
        d = self.divisor(m)
        return minimal_representative(self.k_a + self.l * m, d)


def k_progression(a: Element, base: Element) -> KProgression:
    """k-values along d = a + mB form the progression k_a + m*l, l = (B k_a - 1)/a.

    ``a`` may be a unit (then every k_a works and 0 is used), which covers
    divisors mX - c in F[X].
    """
    if a.is_zero:
        raise DomainError("a must be nonzero")
    if not extended_gcd(a, base).g.is_unit:
        raise DomainError("base not invertible")
    k_a = a.tag.zero if a.is_unit else reverse_k(a, base).value
    l, r = divide(base * k_a - 1, a)
    if not r.is_zero:
        raise AssertionError("B k_a - 1 not divisible by a")
    return KProgression(a, base, k_a, l)


def k_from_power_relation(d: Element, base: Element, t: int, a: Element) -> Element:
    """k_d = B^t (aB)^-1 mod d whenever d | B^t - a with a a unit."""
    _require_coprime(d, base)
    if not a.is_unit:
        raise DomainError("a must be a unit")
    if t < 0:
        raise DomainError("t must be non-negative")
    if not divide(base**t - a, d).remainder.is_zero:
        raise DomainError("d does not divide B^t - a")
    return minimal_representative(base**t * mod_inverse(a * base, d), d)


@dataclass(frozen=True)
class FactorCheck:
    modulus: Element
    digits_checked: int | None
    tail: Element
    divisible: bool


def _base_primes(base: Element, budget: int) -> list[Element]:
    try:
        return [p for p, _ in factor(base, budget)]
    except arith.FactorTooLarge as exc:
        raise DomainError("factor too large") from exc


def general_divisibility(s: Element, n: Element, base: Element, budget: int = arith.TRIAL_LIMIT) -> DivisibilityVerdict:
    """Test n = d * prod p_i^alpha_i with d coprime to B.

    d goes through the reverse test; each p_i^alpha_i (with p_i^beta_i
    exactly dividing B) only needs the ceil(alpha_i/beta_i) rightmost digits.
    """
    if n.tag != base.tag:
        raise DomainError("divisor and base live in different domains")
    if n.is_zero or n.is_unit:
        raise DomainError("divisor must be neither zero nor a unit")
    rest = n
    parts: list[FactorCheck] = []
    residue_parts = []
    digits = to_digits(s, base).digits
    for p in _base_primes(base, budget):
        alpha = element_valuation_at(n, p)
        if not alpha:
            continue
        beta = element_valuation_at(base, p)
        width = ceil(alpha / beta)
        pa = p**alpha
        rest = divide(rest, pa).quotient
        tail = evaluate_digits(digits[-width:], base)
        r = canonical_residue(tail, pa)
        parts.append(FactorCheck(pa, width, tail, r.is_zero))
        residue_parts.append((r, pa))
    if not rest.is_unit:
        v = reverse_reduce(s, rest, base)
        parts.append(FactorCheck(rest, None, v.reduced_value, v.divisible))
        residue_parts.append((v.residue, rest))
        reduced = v.reduced_value
        k = v.k
    else:
        reduced, k = s, None
    r_acc, m_acc = residue_parts[0]
    for r, m in residue_parts[1:]:
        r_acc, m_acc = crt(r_acc, m_acc, r, m), m_acc * m
    residue = canonical_residue(r_acc, n)
    divisible = all(c.divisible for c in parts)
    return DivisibilityVerdict(divisible, residue, reduced, k, (), tuple(parts))


def factor_theorem_check(s: Element, c: int) -> bool:
    """Reverse test by X - c agrees with s(c) == 0 (always True when correct)."""
    tag = s.tag
    if tag.kind is not Kind.POLYNOMIAL:
        raise DomainError("factor theorem needs a polynomial")
    if c % tag.characteristic == 0:
        raise DomainError("c must be nonzero")
    d = tag.x - c
    if s.is_zero:
        return True
    return reverse_reduce(s, d, tag.x).divisible == (s.evaluate(c) == 0)
