import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from euclidiv.digits import (
    Numeral,
    RecurringNumeral,
    format_numeral,
    from_digits,
    parse_numeral,
    to_digits,
)
from euclidiv.domain import GAUSS, ZZ, DomainError

from conftest import F5, gaussians, polys

X = F5.x


def digits_of(s, b):
    return [d.payload if not isinstance(d.payload, tuple) else d for d in to_digits(s, b).digits]


def test_to_digits_examples():
    assert digits_of(ZZ(841), ZZ(10)) == [8, 4, 1]
    assert [d for d in to_digits(X**4 + X**2, X).digits] == [F5(1), F5(0), F5(1), F5(0), F5(0)]
    assert digits_of(ZZ(0), ZZ(10)) == [0]


def test_to_digits_negative_integer_uses_signed_digits():
    assert digits_of(ZZ(-841), ZZ(10)) == [-8, -4, -1]


@pytest.mark.parametrize("base", [ZZ(0), ZZ(1), ZZ(-1), F5(3)])
def test_invalid_base(base):
    with pytest.raises(DomainError, match="invalid base"):
        to_digits(base.tag(5), base)


def test_from_digits_examples():
    assert from_digits(Numeral(ZZ(10), [ZZ(a) for a in (1, 4, 2, 8, 5, 7)])) == 142857
    assert from_digits(Numeral(X, [F5(1), F5(0), F5(1)])) == X**2 + 1
    assert from_digits(Numeral(ZZ(7), [ZZ(0)])) == 0


def test_from_digits_strict_and_lenient():
    n = Numeral(ZZ(10), [ZZ(1), ZZ(12)])
    assert not n.valid
    with pytest.raises(DomainError, match="invalid digit"):
        from_digits(n)
    assert from_digits(n, strict=False) == 22


def test_leading_zero_rejected():
    with pytest.raises(DomainError):
        Numeral(ZZ(10), [ZZ(0), ZZ(1)])


def test_format_examples():
    assert format_numeral(RecurringNumeral(ZZ(10), (), (), [ZZ(a) for a in (1, 4, 2, 8, 5, 7)])) == "0.(142857)"
    rep = [F5(0), F5(1), F5(0), F5(-1)]
    assert format_numeral(RecurringNumeral(X, (), (), rep)) == "0.(0,1,0,4)"
    assert format_numeral(to_digits(ZZ(841), ZZ(10))) == "841"
    assert format_numeral(to_digits(ZZ(300), ZZ(16))) == "[1,2,12]"


def test_repetend_is_minimal_block():
    rn = RecurringNumeral(ZZ(10), (), (), [ZZ(3), ZZ(3), ZZ(3)])
    assert rn.period == 1


@pytest.mark.parametrize("text", ["0.(142857)", "3.(142857)", "0.08(3)", "841"])
def test_parse_format_round_trip_decimal(text):
    assert format_numeral(parse_numeral(text, ZZ(10))) == text


def test_parse_format_round_trip_poly():
    text = "0.(0,1,0,4)"
    rn = parse_numeral(text, X)
    assert rn.repetend_digits == (F5(0), F5(1), F5(0), F5(4))
    assert format_numeral(rn) == text


def test_gaussian_expansion_round_trips():
    n = to_digits(GAUSS((7, 3)), GAUSS((2, 1)))
    assert from_digits(n, strict=False) == GAUSS((7, 3))


@given(st.integers(-10**12, 10**12), st.integers(2, 40))
def test_integer_round_trip(s, b):
    assert from_digits(to_digits(ZZ(s), ZZ(b)), strict=False) == s


@given(st.integers(1, 10**15), st.integers(2, 40))
def test_integer_digit_count(s, b):
    n = len(to_digits(ZZ(s), ZZ(b)))
    # exact integer log avoids float rounding at powers of b
    k = 0
    while b ** (k + 1) <= s:
        k += 1
    assert n == k + 1


@given(polys(max_deg=10))
def test_polynomial_base_x_digits_are_coefficients(s):
    digits = to_digits(s, X).digits
    if s.is_zero:
        assert digits == (F5.zero,)
    else:
        assert tuple(d.payload[0] if d.payload else 0 for d in reversed(digits)) == s.payload


@given(polys(max_deg=10), polys(max_deg=3))
def test_polynomial_round_trip(s, b):
    assume(not b.is_zero and not b.is_unit)
    n = to_digits(s, b)
    assert n.valid
    assert from_digits(n) == s


@given(gaussians(500))
def test_gaussian_round_trip_best_effort(s):
    try:
        n = to_digits(s, GAUSS((2, 1)))
    except DomainError:
        return
    assert from_digits(n, strict=False) == s
