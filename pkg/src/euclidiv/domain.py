"""Three concrete Euclidean domains behind one element type.

Supported rings are the rational integers, the Gaussian integers and
polynomials over a prime field F_p.  An :class:`Element` carries its
:class:`DomainTag`; arithmetic between elements of different rings raises.

Division conventions (fixed so every remainder is a function of the
residue class):

* integers: remainder in ``[0, |d|)``;
* Gaussian integers: the exact quotient is rounded coordinate-wise to the
  nearest integer, ties toward +infinity, so ``N(r) <= N(d)/2``;
* polynomials: ordinary long division, ``deg r < deg d``.
"""

from __future__ import annotations

import enum
import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from . import arith

Payload = Union[int, tuple]


class DomainError(ValueError):
    """Raised when an operation's mathematical preconditions fail."""


class NotInvertibleError(DomainError):
    pass


class Kind(enum.Enum):
    INTEGERS = "z"
    GAUSSIAN = "gauss"
    POLYNOMIAL = "poly"


@dataclass(frozen=True)
class DomainTag:
    kind: Kind
    characteristic: int | None = None

    def __post_init__(self):
        if self.kind is Kind.POLYNOMIAL:
            if self.characteristic is None or not arith.is_prime(self.characteristic):
                raise DomainError("polynomial domain needs a prime characteristic")
        elif self.characteristic is not None:
            raise DomainError("characteristic only applies to polynomial domains")

    def __call__(self, value) -> Element:
        return Element(self, _coerce(self, value))

    def __str__(self):
        if self.kind is Kind.INTEGERS:
            return "Z"
        if self.kind is Kind.GAUSSIAN:
            return "Z[i]"
        return f"F_{self.characteristic}[X]"

    @property
    def zero(self) -> Element:
        return self(0)

    @property
    def one(self) -> Element:
        return self(1)

    @property
    def x(self) -> Element:
        if self.kind is not Kind.POLYNOMIAL:
            raise DomainError("X only exists in polynomial domains")
        return Element(self, (0, 1))

    @property
    def i(self) -> Element:
        if self.kind is not Kind.GAUSSIAN:
            raise DomainError("i only exists in the Gaussian integers")
        return Element(self, (0, 1))

    def units(self) -> list[Element]:
        if self.kind is Kind.INTEGERS:
            return [self(1), self(-1)]
        if self.kind is Kind.GAUSSIAN:
            return [self((1, 0)), self((0, 1)), self((-1, 0)), self((0, -1))]
        return [self(c) for c in range(1, self.characteristic)]

    def parse(self, text: str) -> Element:
        return parse_element(text, self)


ZZ = DomainTag(Kind.INTEGERS)
GAUSS = DomainTag(Kind.GAUSSIAN)


def polynomials(p: int) -> DomainTag:
    return DomainTag(Kind.POLYNOMIAL, p)


# -- payload level arithmetic -------------------------------------------------


def _pnorm(coeffs, p: int) -> tuple:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _coerce(tag: DomainTag, value) -> Payload:
    if isinstance(value, Element):
        if value.tag != tag:
            raise DomainError(f"element of {value.tag} used in {tag}")
        return value.payload
    if isinstance(value, bool):
        raise TypeError("booleans are not ring elements")
    if tag.kind is Kind.INTEGERS:
        if not isinstance(value, int):
            raise TypeError(f"cannot make an integer from {value!r}")
        return value
    if tag.kind is Kind.GAUSSIAN:
        if isinstance(value, int):
            return (value, 0)
        if isinstance(value, tuple) and len(value) == 2 and all(isinstance(v, int) for v in value):
            return value
        raise TypeError(f"cannot make a Gaussian integer from {value!r}")
    p = tag.characteristic
    if isinstance(value, int):
        return _pnorm([value], p)
    if isinstance(value, (list, tuple)) and all(isinstance(v, int) for v in value):
        return _pnorm(value, p)
    raise TypeError(f"cannot make a polynomial from {value!r}")


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _pnorm([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def _pneg(a, p):
    return _pnorm([-x for x in a], p)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pnorm(out, p)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero")
    inv = pow(b[-1], -1, p)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (), tuple(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] * inv % p
        if c:
            quot[k - db] = c
            for j, y in enumerate(b):
                rem[k - db + j] = (rem[k - db + j] - c * y) % p
    return _pnorm(quot, p), _pnorm(rem[:db], p)


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward +infinity."""
    return (2 * num + den) // (2 * den)


# -- the element type ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Element:
    tag: DomainTag
    payload: Payload

    def _other(self, other) -> Payload | None:
        if isinstance(other, Element):
            if other.tag != self.tag:
                raise DomainError(f"cannot combine {self.tag} with {other.tag}")
            return other.payload
        if isinstance(other, (int, tuple, list)) and not isinstance(other, bool):
            return _coerce(self.tag, other)
        return None

    def __eq__(self, other):
        if isinstance(other, Element) and other.tag != self.tag:
            return False
        try:
            o = self._other(other)
        except (TypeError, DomainError):
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.payload == o

    def __hash__(self):
        return hash((self.tag, self.payload))

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, k = self.payload, self.tag.kind
        if k is Kind.INTEGERS:
            return Element(self.tag, a + o)
        if k is Kind.GAUSSIAN:
            return Element(self.tag, (a[0] + o[0], a[1] + o[1]))
        return Element(self.tag, _padd(a, o, self.tag.characteristic))

    __radd__ = __add__

    def __neg__(self):
        a, k = self.payload, self.tag.kind
        if k is Kind.INTEGERS:
            return Element(self.tag, -a)
        if k is Kind.GAUSSIAN:
            return Element(self.tag, (-a[0], -a[1]))
        return Element(self.tag, _pneg(a, self.tag.characteristic))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, k = self.payload, self.tag.kind
        if k is Kind.INTEGERS:
            return Element(self.tag, a - o)
        if k is Kind.GAUSSIAN:
            return Element(self.tag, (a[0] - o[0], a[1] - o[1]))
        p = self.tag.characteristic
        return Element(self.tag, _padd(a, [-x for x in o], p))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, k = self.payload, self.tag.kind
        if k is Kind.INTEGERS:
            return Element(self.tag, a * o)
        if k is Kind.GAUSSIAN:
            return Element(self.tag, (a[0] * o[0] - a[1] * o[1], a[0] * o[1] + a[1] * o[0]))
        return Element(self.tag, _pmul(a, o, self.tag.characteristic))

    __rmul__ = __mul__

    def __pow__(self, n: int, mod: Element | None = None):
        if n < 0:
            raise ValueError("negative exponents need mod_inverse")
        if mod is not None and self.tag.kind is Kind.INTEGERS:
            m = abs(_payload(mod))
            return Element(self.tag, pow(self.payload, n, m))
        result, base = self.tag.one, self
        if mod is not None:
            base = canonical_residue(base, mod)
        while n:
            if n & 1:
                result = result * base
                if mod is not None:
                    result = canonical_residue(result, mod)
            n >>= 1
            if n:
                base = base * base
                if mod is not None:
                    base = canonical_residue(base, mod)
        return result

    def __divmod__(self, other):
        res = divide(self, self._coerce_elem(other))
        return res.quotient, res.remainder

    def __floordiv__(self, other):
        return divide(self, self._coerce_elem(other)).quotient

    def __mod__(self, other):
        return divide(self, self._coerce_elem(other)).remainder

    def _coerce_elem(self, other) -> Element:
        return other if isinstance(other, Element) else self.tag(other)

    def __bool__(self):
        return not self.is_zero

    @property
    def is_zero(self) -> bool:
        k = self.tag.kind
        if k is Kind.INTEGERS:
            return self.payload == 0
        if k is Kind.GAUSSIAN:
            return self.payload == (0, 0)
        return self.payload == ()

    @property
    def is_unit(self) -> bool:
        k, a = self.tag.kind, self.payload
        if k is Kind.INTEGERS:
            return abs(a) == 1
        if k is Kind.GAUSSIAN:
            return a[0] * a[0] + a[1] * a[1] == 1
        return len(a) == 1

    def conjugate(self) -> Element:
        if self.tag.kind is not Kind.GAUSSIAN:
            return self
        return Element(self.tag, (self.payload[0], -self.payload[1]))

    def degree(self) -> int:
        if self.tag.kind is not Kind.POLYNOMIAL:
            raise DomainError("degree is only defined for polynomials")
        return len(self.payload) - 1

    def evaluate(self, c: int) -> int:
        """Value of a polynomial at a field element."""
        p = self.tag.characteristic
        acc = 0
        for coeff in reversed(self.payload):
            acc = (acc * c + coeff) % p
        return acc

    def sort_key(self):
        """Total order used for canonical rotations and tie-breaks."""
        k, a = self.tag.kind, self.payload
        if k is Kind.POLYNOMIAL:
            return (len(a), tuple(reversed(a)))
        return a

    def __int__(self):
        if self.tag.kind is Kind.INTEGERS:
            return self.payload
        if self.tag.kind is Kind.GAUSSIAN and self.payload[1] == 0:
            return self.payload[0]
        if self.tag.kind is Kind.POLYNOMIAL and len(self.payload) <= 1:
            return self.payload[0] if self.payload else 0
        raise TypeError(f"{self} is not an integer")

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self.tag}, {format_element(self)})"


def _payload(e) -> Payload:
    return e.payload if isinstance(e, Element) else e


def _same_tag(*elems: Element) -> DomainTag:
    tag = elems[0].tag
    for e in elems[1:]:
        if e.tag != tag:
            raise DomainError(f"cannot combine {tag} with {e.tag}")
    return tag


# -- core operations -----------------------------------------------------------


@dataclass(frozen=True)
class DivisionResult:
    quotient: Element
    remainder: Element

    def __iter__(self):
        return iter((self.quotient, self.remainder))


@dataclass(frozen=True)
class BezoutCertificate:
    g: Element
    x: Element
    y: Element


def valuation(e: Element) -> int:
    """Euclidean valuation: |e|, the norm re^2 + im^2, or the degree."""
    if e.is_zero:
        raise DomainError("valuation of zero undefined")
    k, a = e.tag.kind, e.payload
    if k is Kind.INTEGERS:
        return abs(a)
    if k is Kind.GAUSSIAN:
        return a[0] * a[0] + a[1] * a[1]
    return len(a) - 1


def divide(s: Element, d: Element) -> DivisionResult:
    tag = _same_tag(s, d)
    if d.is_zero:
        raise ZeroDivisionError("division by zero")
    k, a, b = tag.kind, s.payload, d.payload
    if k is Kind.INTEGERS:
        r = a % abs(b)
        return DivisionResult(Element(tag, (a - r) // b), Element(tag, r))
    if k is Kind.GAUSSIAN:
        n = b[0] * b[0] + b[1] * b[1]
        re_num = a[0] * b[0] + a[1] * b[1]
        im_num = a[1] * b[0] - a[0] * b[1]
        q = Element(tag, (_round_div(re_num, n), _round_div(im_num, n)))
        return DivisionResult(q, s - d * q)
    q, r = _pdivmod(a, b, tag.characteristic)
    return DivisionResult(Element(tag, q), Element(tag, r))


def _normalizing_unit(g: Element) -> Element:
    """Unit u with u*g in normal form (positive, monic or first quadrant)."""
    tag, a = g.tag, g.payload
    if tag.kind is Kind.INTEGERS:
        return tag(-1 if a < 0 else 1)
    if tag.kind is Kind.POLYNOMIAL:
        return tag(pow(a[-1], -1, tag.characteristic))
    for u in tag.units():
        re_, im_ = (u * g).payload
        if re_ > 0 and im_ >= 0:
            return u
    raise AssertionError("unreachable: nonzero Gaussian integer has a first-quadrant associate")


def normalize(e: Element) -> Element:
    """Canonical associate of ``e`` (zero maps to zero)."""
    if e.is_zero:
        return e
    return _normalizing_unit(e) * e


def extended_gcd(a: Element, b: Element) -> BezoutCertificate:
    tag = _same_tag(a, b)
    if a.is_zero and b.is_zero:
        raise DomainError("gcd of zero and zero undefined")
    r0, r1 = a, b
    x0, x1 = tag.one, tag.zero
    y0, y1 = tag.zero, tag.one
    while not r1.is_zero:
        q = divide(r0, r1).quotient
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    u = _normalizing_unit(r0)
    return BezoutCertificate(u * r0, u * x0, u * y0)


def gcd(a: Element, b: Element) -> Element:
    return extended_gcd(a, b).g


def canonical_residue(e: Element, d: Element) -> Element:
    return divide(e, d).remainder


def is_divisible(s: Element, d: Element) -> bool:
    return canonical_residue(s, d).is_zero


def _require_modulus(d: Element) -> None:
    if d.is_zero or d.is_unit:
        raise DomainError("modulus must be neither zero nor a unit")


def mod_inverse(b: Element, d: Element) -> Element:
    _same_tag(b, d)
    _require_modulus(d)
    cert = extended_gcd(b, d)
    if cert.g != d.tag.one:
        raise NotInvertibleError("not invertible")
    return canonical_residue(cert.x, d)


def minimal_representative(e: Element, d: Element) -> Element:
    """Least-valuation member of the class of ``e`` modulo ``d``.

    Ties: integers prefer the positive half, Gaussian integers the largest
    real then imaginary part; polynomial remainders are already unique.
    """
    r = canonical_residue(e, d)
    tag = r.tag
    if r.is_zero or tag.kind is Kind.POLYNOMIAL:
        return r
    if tag.kind is Kind.INTEGERS:
        m = abs(d.payload)
        return Element(tag, r.payload - m if 2 * r.payload > m else r.payload)
    candidates = [r + d * tag((u, v)) for u in (-1, 0, 1) for v in (-1, 0, 1)]
    best = min(valuation(c) if not c.is_zero else 0 for c in candidates)
    ties = [c for c in candidates if (valuation(c) if not c.is_zero else 0) == best]
    return max(ties, key=lambda c: c.payload)


def crt(r1: Element, m1: Element, r2: Element, m2: Element) -> Element:
    """Combine r1 mod m1 and r2 mod m2 for coprime moduli."""
    cert = extended_gcd(m1, m2)
    if not cert.g.is_unit:
        raise DomainError("moduli are not coprime")
    # cert.g == 1 after normalization
    return canonical_residue(r1 + (r2 - r1) * cert.x * m1, m1 * m2)


def residue_count(d: Element) -> int:
    """Size of E/dE."""
    if d.is_zero:
        raise DomainError("infinite residue ring")
    k = d.tag.kind
    if k is Kind.INTEGERS:
        return abs(d.payload)
    if k is Kind.GAUSSIAN:
        return valuation(d)
    return d.tag.characteristic ** valuation(d)


def residues(d: Element) -> list[Element]:
    """Canonical representatives of every class modulo ``d``."""
    tag = d.tag
    k = tag.kind
    if k is Kind.INTEGERS:
        return [tag(t) for t in range(abs(d.payload))]
    if k is Kind.POLYNOMIAL:
        n, p = valuation(d), tag.characteristic
        return [tag(list(c)) for c in itertools.product(range(p), repeat=n)]
    n = valuation(d)
    bound = int(n**0.5) + 1
    seen: dict[Payload, Element] = {}
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            r = canonical_residue(tag((a, b)), d)
            seen.setdefault(r.payload, r)
    if len(seen) != n:
        raise AssertionError("residue enumeration missed classes")
    return sorted(seen.values(), key=lambda e: e.payload)


def element_valuation_at(e: Element, p: Element) -> int:
    """Exponent of the prime ``p`` in the nonzero element ``e``."""
    if e.is_zero:
        raise DomainError("valuation of zero undefined")
    v = 0
    q, r = divide(e, p)
    while r.is_zero:
        v += 1
        e = q
        q, r = divide(e, p)
    return v


# -- factorization ------------------------------------------------------------------


def _sqrt_minus_one(q: int) -> int:
    for a in range(2, q):
        x = pow(a, (q - 1) // 4, q)
        if x * x % q == q - 1:
            return x
    raise DomainError(f"{q} is not 1 mod 4")


def gaussian_prime_over(q: int) -> list[Element]:
    """Normalized Gaussian primes dividing the rational prime ``q``."""
    if q == 2:
        return [GAUSS((1, 1))]
    if q % 4 == 3:
        return [GAUSS((q, 0))]
    x = _sqrt_minus_one(q)
    pi = normalize(gcd(GAUSS((q, 0)), GAUSS((x, 1))))
    return [pi, normalize(pi.conjugate())]


def _monic_polys(tag: DomainTag, deg: int) -> Iterator[Element]:
    p = tag.characteristic
    for low in itertools.product(range(p), repeat=deg):
        yield Element(tag, tuple(low) + (1,))


def factor(e: Element, budget: int = arith.TRIAL_LIMIT) -> list[tuple[Element, int]]:
    """Prime factorization up to units, primes normalized.

    Integers use trial division, Gaussian integers factor the norm,
    polynomials use trial division by monic polynomials.
    """
    if e.is_zero:
        raise DomainError("cannot factor zero")
    tag = e.tag
    if tag.kind is Kind.INTEGERS:
        return [(tag(p), a) for p, a in sorted(arith.factorint(e.payload, budget).items())]
    if tag.kind is Kind.GAUSSIAN:
        out = []
        for q in sorted(arith.factorint(valuation(e), budget)):
            for pi in gaussian_prime_over(q):
                v = element_valuation_at(e, pi)
                if v:
                    out.append((pi, v))
        return out
    out = []
    rest = normalize(e)
    deg = 1
    steps = 0
    while valuation(rest) >= 2 * deg:
        for cand in _monic_polys(tag, deg):
            steps += 1
            if steps > budget:
                raise arith.FactorTooLarge("factor too large")
            v = 0
            while True:
                q, r = divide(rest, cand)
                if not r.is_zero:
                    break
                rest, v = q, v + 1
            if v:
                out.append((cand, v))
        deg += 1
    if valuation(rest) > 0:
        merged = False
        for i, (f, v) in enumerate(out):
            if f == rest:
                out[i] = (f, v + 1)
                merged = True
        if not merged:
            out.append((rest, 1))
    return sorted(out, key=lambda fv: fv[0].sort_key())


def is_prime_element(e: Element) -> bool:
    if e.is_zero or e.is_unit:
        return False
    f = factor(e)
    return len(f) == 1 and f[0][1] == 1


# -- literal grammar ---------------------------------------------------------------------

_INT_RE = re.compile(r"^[+-]?\d+$")
_GAUSS_RE = re.compile(r"^(?:(?P<re>[+-]?\d+)(?=$|[+-]))?(?:(?P<im>[+-]?\d*)i)?$")
_TERM_RE = re.compile(r"^(?:(?P<c>\d+)\*?)?(?P<x>x(?:\^(?P<k>\d+))?)?$")


class ParseError(ValueError):
    pass


def parse_element(text: str, tag: DomainTag) -> Element:
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty literal")
    if tag.kind is Kind.INTEGERS:
        if not _INT_RE.match(s):
            raise ParseError(f"not an integer literal: {text!r}")
        return tag(int(s))
    if tag.kind is Kind.GAUSSIAN:
        m = _GAUSS_RE.match(s)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ParseError(f"not a Gaussian integer literal: {text!r}")
        re_ = int(m.group("re") or 0)
        im_s = m.group("im")
        if im_s is None:
            im_ = 0
        elif im_s in ("", "+"):
            im_ = 1
        elif im_s == "-":
            im_ = -1
        else:
            im_ = int(im_s)
        return tag((re_, im_))
    coeffs: dict[int, int] = {}
    body = s.lower()
    if body[0] not in "+-":
        body = "+" + body
    for sign, term in re.findall(r"([+-])([^+-]+)", body):
        m = _TERM_RE.match(term)
        if not m or (m.group("c") is None and m.group("x") is None):
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        c = int(m.group("c")) if m.group("c") is not None else 1
        k = 0 if m.group("x") is None else int(m.group("k") or 1)
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
    if "".join(sign + term for sign, term in re.findall(r"([+-])([^+-]+)", body)) != body:
        raise ParseError(f"not a polynomial literal: {text!r}")
    top = max(coeffs)
    return tag([coeffs.get(k, 0) for k in range(top + 1)])


def format_element(e: Element) -> str:
    k, a = e.tag.kind, e.payload
    if k is Kind.INTEGERS:
        return str(a)
    if k is Kind.GAUSSIAN:
        re_, im_ = a
        if im_ == 0:
            return str(re_)
        im_s = {1: "i", -1: "-i"}.get(im_, f"{im_}i")
        if re_ == 0:
            return im_s
        return f"{re_}{'' if im_s.startswith('-') else '+'}{im_s}"
    if not a:
        return "0"
    terms = []
    for power in range(len(a) - 1, -1, -1):
        c = a[power]
        if not c:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            xs = "x" if power == 1 else f"x^{power}"
            terms.append(xs if c == 1 else f"{c}*{xs}")
    return "+".join(terms)


# -- axiom checks -------------------------------------------------------------------------


def random_element(tag: DomainTag, rng: random.Random, nonzero: bool = False) -> Element:
    while True:
        if tag.kind is Kind.INTEGERS:
            e = tag(rng.randint(-10**6, 10**6) if rng.random() < 0.8 else rng.randint(-12, 12))
        elif tag.kind is Kind.GAUSSIAN:
            span = 1000 if rng.random() < 0.8 else 3
            e = tag((rng.randint(-span, span), rng.randint(-span, span)))
        else:
            deg = rng.randint(0, 8)
            e = tag([rng.randrange(tag.characteristic) for _ in range(deg + 1)])
        if not (nonzero and e.is_zero):
            return e


@dataclass
class AxiomReport:
    tag: DomainTag
    samples: int
    passed: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, name: str, good: bool, detail: str) -> None:
        if good:
            self.passed[name] = self.passed.get(name, 0) + 1
        elif len(self.failures) < 50:
            self.failures.append(f"{name}: {detail}")


def _division_choices(s: Element, d: Element) -> list[DivisionResult]:
    """Every (q, r) with s = dq + r and r = 0 or v(r) < v(d), for Z and F_p[X]."""
    base = divide(s, d)
    if s.tag.kind is not Kind.INTEGERS or base.remainder.is_zero:
        return [base]
    step = 1 if d.payload > 0 else -1
    alt = DivisionResult(base.quotient + step, base.remainder - d * step)
    return [base, alt]


def check_axioms(tag: DomainTag, sample_budget: int = 1000, seed: int = 42) -> AxiomReport:
    """Sample the Euclidean-domain axioms on seeded random elements.

    The strong-division clause (v(q) < v(s) for every admissible quotient)
    is checked only for integers and polynomials, and only for dividends
    that are not units: in Z the dividend -1 has the admissible quotient -1
    for every divisor > 1.
    """
    rng = random.Random(seed)
    rep = AxiomReport(tag, sample_budget)
    one_val = valuation(tag.one)
    strong = tag.kind in (Kind.INTEGERS, Kind.POLYNOMIAL)
    if not strong:
        rep.skipped.append("strong-division clause (not established for Z[i])")
    for _ in range(sample_budget):
        a = random_element(tag, rng, nonzero=True)
        b = random_element(tag, rng, nonzero=True)
        rep._record("v(ab) >= v(a)", valuation(a * b) >= valuation(a), f"a={a}, b={b}")

        u = rng.choice(tag.units()) if rng.random() < 0.3 else a
        rep._record("unit iff v(B) = v(1)", u.is_unit == (valuation(u) == one_val), f"B={u}")

        s = random_element(tag, rng)
        q, r = divide(s, b)
        rep._record("s = dq + r", b * q + r == s, f"s={s}, d={b}")
        rep._record("r = 0 or v(r) < v(d)", r.is_zero or valuation(r) < valuation(b), f"s={s}, d={b}")

        q2, r2 = divide(b * a, b)
        rep._record("unique division of multiples", q2 == a and r2.is_zero, f"d={b}, e={a}")

        if strong and not b.is_unit and not s.is_zero and not s.is_unit:
            for choice in _division_choices(s, b):
                cq, cr = choice
                good = (cq.is_zero or valuation(cq) < valuation(s)) and (
                    cr.is_zero or valuation(cr) < valuation(b)
                )
                rep._record("strong division", good, f"s={s}, d={b}, q={cq}, r={cr}")
    return rep
