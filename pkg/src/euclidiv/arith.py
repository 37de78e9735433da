"""Plain-integer helpers shared by the domain, period and census modules."""

from __future__ import annotations

from functools import reduce
from math import gcd, isqrt

TRIAL_LIMIT = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FactorTooLarge(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases.

    Deterministic for n < 3.3e24, which covers every modulus this package builds.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorint(n: int, limit: int = TRIAL_LIMIT) -> dict[int, int]:
    """Factor ``|n|`` by trial division up to ``limit``.

    A leftover cofactor is accepted if it is prime or below ``limit**2``;
    anything else raises :class:`FactorTooLarge`.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p * p <= n:
        if p > limit:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        if n > limit * limit and not is_prime(n):
            raise FactorTooLarge("factor too large")
        out[n] = out.get(n, 0) + 1
    return out


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def int_valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n`` (n != 0)."""
    if n == 0:
        raise ValueError("valuation of zero undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def order_from_multiple(b: int, n: int, multiple: int, factors: dict[int, int] | None = None) -> int:
    """Least e with b**e == 1 mod n, given any multiple of that order."""
    if factors is None:
        factors = factorint(multiple)
    e = multiple
    for q in factors:
        while e % q == 0 and pow(b, e // q, n) == 1:
            e //= q
    return e


def int_order(b: int, n: int) -> int:
    """Multiplicative order of ``b`` modulo ``|n|`` via the factored totient."""
    n = abs(n)
    if n < 2:
        raise ValueError("modulus must be neither zero nor a unit")
    if gcd(b, n) != 1:
        raise ValueError("base not invertible")
    phi = 1
    phi_factors: dict[int, int] = {}
    for p, a in factorint(n).items():
        phi *= p ** (a - 1) * (p - 1)
        if a > 1:
            phi_factors[p] = phi_factors.get(p, 0) + a - 1
        for q, c in factorint(p - 1).items():
            phi_factors[q] = phi_factors.get(q, 0) + c
    return order_from_multiple(b % n, n, phi, phi_factors)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
