"""Positional numerals in base B, finite and eventually periodic."""

from __future__ import annotations

from dataclasses import dataclass

from .domain import DomainError, Element, Kind, divide, valuation

DIGIT_CAP = 10**6


def is_digit(a: Element, base: Element) -> bool:
    return a.is_zero or valuation(a) < valuation(base)


def _check_base(base: Element) -> None:
    if base.is_zero or base.is_unit:
        raise DomainError("invalid base")


@dataclass(frozen=True)
class Numeral:
    """Digits most significant first: ``s_m ... s_1 s_0``."""

    base: Element
    digits: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise DomainError("a numeral needs at least one digit")
        if len(self.digits) > 1 and self.digits[0].is_zero:
            raise DomainError("leading digit must be nonzero")

    @property
    def valid(self) -> bool:
        """False marks a non-digit sequence (some v(s_i) >= v(B))."""
        return all(is_digit(a, self.base) for a in self.digits)

    def __len__(self):
        return len(self.digits)


def _minimal_block(block: tuple) -> tuple:
    n = len(block)
    for p in range(1, n):
        if n % p == 0 and block == block[:p] * (n // p):
            return block[:p]
    return block


@dataclass(frozen=True)
class RecurringNumeral:
    """``integer . preperiod (repetend)`` with the repetend reduced to its minimal block."""

    base: Element
    integer_digits: tuple[Element, ...]
    preperiod_digits: tuple[Element, ...]
    repetend_digits: tuple[Element, ...]

    def __post_init__(self):
        if not self.repetend_digits:
            raise DomainError("a recurring numeral needs a nonempty repetend")
        object.__setattr__(self, "integer_digits", tuple(self.integer_digits))
        object.__setattr__(self, "preperiod_digits", tuple(self.preperiod_digits))
        object.__setattr__(self, "repetend_digits", _minimal_block(tuple(self.repetend_digits)))

    @property
    def period(self) -> int:
        return len(self.repetend_digits)

    @property
    def valid(self) -> bool:
        every = self.integer_digits + self.preperiod_digits + self.repetend_digits
        return all(is_digit(a, self.base) for a in every)


def evaluate_digits(digits, base: Element) -> Element:
    """Horner evaluation of a most-significant-first digit sequence."""
    acc = base.tag.zero
    for a in digits:
        acc = acc * base + a
    return acc


def to_digits(s: Element, base: Element, max_digits: int = DIGIT_CAP) -> Numeral:
    """Expand ``s`` by repeated division by ``base``.

    Negative integers get the negated digits of ``|s|``, since non-negative
    remainders never terminate for them.
    """
    if s.tag != base.tag:
        raise DomainError("element and base live in different domains")
    _check_base(base)
    if s.is_zero:
        return Numeral(base, (s,))
    if s.tag.kind is Kind.INTEGERS and s.payload < 0:
        n = to_digits(-s, base, max_digits)
        return Numeral(base, tuple(-a for a in n.digits))
    out = []
    seen = set()
    q = s
    while not q.is_zero:
        if len(out) >= max_digits:
            raise DomainError(f"digit expansion exceeded {max_digits} digits")
        if q.payload in seen:
            raise DomainError(f"digit expansion of {s} in base {base} does not terminate")
        seen.add(q.payload)
        q, r = divide(q, base)
        out.append(r)
    return Numeral(base, tuple(reversed(out)))


def from_digits(n: Numeral, strict: bool = True) -> Element:
    if strict and not n.valid:
        raise DomainError("invalid digit")
    return evaluate_digits(n.digits, n.base)


def digit_count(s: Element, base: Element) -> int:
    return len(to_digits(s, base))


def _compact(digits, base: Element) -> bool:
    if base.tag.kind is not Kind.INTEGERS or not 2 <= base.payload <= 10:
        return False
    return all(0 <= a.payload <= 9 for a in digits)


def _join(digits, compact: bool) -> str:
    if compact:
        return "".join(str(a.payload) for a in digits)
    return ",".join(str(a) for a in digits)


def format_numeral(n: Numeral | RecurringNumeral) -> str:
    if isinstance(n, Numeral):
        if _compact(n.digits, n.base):
            return _join(n.digits, True)
        return "[" + _join(n.digits, False) + "]"
    every = n.integer_digits + n.preperiod_digits + n.repetend_digits
    compact = _compact(every, n.base)
    if not n.integer_digits:
        head = "0"
    elif compact:
        head = _join(n.integer_digits, True)
    else:
        head = "[" + _join(n.integer_digits, False) + "]"
    pre = _join(n.preperiod_digits, compact)
    return f"{head}.{pre}({_join(n.repetend_digits, compact)})"


def _split_digits(text: str, compact: bool, tag) -> tuple[Element, ...]:
    if not text:
        return ()
    if compact:
        return tuple(tag(int(ch)) for ch in text)
    return tuple(tag.parse(part) for part in text.split(","))


def parse_numeral(text: str, base: Element) -> Numeral | RecurringNumeral:
    """Inverse of :func:`format_numeral`."""
    tag = base.tag
    s = text.strip()
    if "(" not in s:
        if s.startswith("[") and s.endswith("]"):
            return Numeral(base, _split_digits(s[1:-1], False, tag))
        if not s.isdigit():
            raise DomainError(f"not a numeral: {text!r}")
        return Numeral(base, _split_digits(s, True, tag))
    head, _, frac = s.partition(".")
    if not frac.endswith(")") or frac.count("(") != 1:
        raise DomainError(f"not a recurring numeral: {text!r}")
    pre, _, rep = frac[:-1].partition("(")
    small_base = tag.kind is Kind.INTEGERS and 2 <= base.payload <= 10
    compact = small_base and "," not in frac and "-" not in frac
    if head.startswith("["):
        int_digits = _split_digits(head[1:-1], False, tag)
    elif head == "0":
        int_digits = ()
    else:
        int_digits = _split_digits(head, True, tag)
    return RecurringNumeral(base, int_digits, _split_digits(pre.rstrip(","), compact, tag),
                            _split_digits(rep, compact, tag))
