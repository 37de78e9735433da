import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclidiv.digits import RecurringNumeral, format_numeral, parse_numeral
from euclidiv.domain import GAUSS, ZZ, DomainError, canonical_residue, extended_gcd, residue_count
from euclidiv.period import multiplicative_order
from euclidiv.recurring import (
    canonical_rotation,
    chains,
    cyclic_multiples_check,
    expansion_by_quotients,
    expansion_sequence,
    midy_complement_check,
    recurring_expansion,
    reduce_fraction,
    repetend,
    same_period_for_divisors_check,
    square_split_check,
    unity_recurring_witness,
    value_of_recurring,
)

from conftest import F5

X = F5.x
TEN = ZZ(10)


def ints(seq):
    return [a.payload for a in seq]


def decimal_digits(a, d, n):
    """Long division with plain ints, the test oracle."""
    out = []
    for _ in range(n):
        a *= 10
        out.append(a // d)
        a %= d
    return out


def test_expansion_examples():
    assert ints(expansion_sequence(ZZ(1), ZZ(7), TEN, 6)) == [1, 4, 2, 8, 5, 7]
    assert ints(expansion_sequence(ZZ(1), ZZ(17), TEN, 16)) == [0, 5, 8, 8, 2, 3, 5, 2, 9, 4, 1, 1, 7, 6, 4, 7]
    assert ints(expansion_sequence(ZZ(0), ZZ(13), TEN, 5)) == [0] * 5


def test_expansion_rejects_large_numerator():
    with pytest.raises(DomainError):
        expansion_sequence(ZZ(9), ZZ(7), TEN, 3)


def test_repetend_examples():
    r = repetend(ZZ(7), TEN)
    assert (r.period, r.value) == (6, 142857)
    r = repetend(ZZ(17), TEN)
    assert r.period == 16 and "".join(map(str, ints(r.digits))) == "0588235294117647"
    r = repetend(ZZ(27), TEN)
    assert (r.period, r.value, ints(r.digits)) == (3, 37, [0, 3, 7])
    r = repetend(X**2 + 1, X)
    assert r.period == 4
    assert r.value == X**2 - 1
    assert r.digits == (F5(0), F5(1), F5(0), F5(-1))


def test_repetend_requires_coprime_base():
    with pytest.raises(DomainError, match="base not invertible"):
        repetend(ZZ(14), TEN)


def test_repetend_gaussian():
    d, b = GAUSS((3, 2)), GAUSS((2, 1))
    r = repetend(d, b)
    assert d * r.value == b**r.period - 1
    assert r.period == multiplicative_order(b, d)


def test_value_of_recurring_examples():
    rn = parse_numeral("0.(142857)", TEN)
    num, den = value_of_recurring(rn)
    assert (num, den) == (142857, 999999)
    assert reduce_fraction(num, den) == (1, 7)
    assert value_of_recurring(parse_numeral("0.(9)", TEN)) == (1, 1)
    num, den = value_of_recurring(parse_numeral("0.(0)", TEN))
    assert num == 0 and den == 9


def test_value_of_recurring_with_preperiod():
    num, den = value_of_recurring(parse_numeral("0.08(3)", TEN))
    assert Fraction(num.payload, den.payload) == Fraction(1, 12)


def test_recurring_expansion_examples():
    assert format_numeral(recurring_expansion(ZZ(1), ZZ(12), TEN)) == "0.08(3)"
    assert format_numeral(recurring_expansion(ZZ(22), ZZ(7), TEN)) == "3.(142857)"
    assert format_numeral(recurring_expansion(F5.one, X**2 + 1, X)) == "0.(0,1,0,4)"


def test_chain_examples():
    assert chains(ZZ(7), TEN).entries == ((6, 1), (1, 1))
    assert chains(ZZ(13), TEN).entries == ((6, 2), (1, 1))
    c21 = chains(ZZ(21), TEN)
    assert c21.entries == ((6, 3), (1, 3))
    singles = {tuple(ints(c.digits)) for c in c21.chains if c.length == 1}
    # 7/21 = 0.(3), 14/21 = 0.(6), 21/21 = 0.(9)
    assert singles == {(3,), (6,), (9,)}
    assert tuple(ints(chains(ZZ(7), TEN).chains[0].digits)) == (1, 4, 2, 8, 5, 7)


def test_chain_budget():
    with pytest.raises(DomainError, match="budget"):
        chains(ZZ(10007), TEN, budget=1000)


def test_cyclic_multiples_examples():
    rep = cyclic_multiples_check(ZZ(7), TEN)
    assert rep.ok
    got = {int("".join(map(str, ints(m)))) for m in rep.multiples}
    assert got == {142857, 285714, 428571, 571428, 714285, 857142}
    assert rep.times_divisor == 999999
    rep = cyclic_multiples_check(ZZ(17), TEN)
    assert rep.ok and rep.times_divisor == int("9" * 16)


def test_cyclic_multiples_needs_full_period():
    # 1/3 has period 1 < 2, so 3 has two chains
    with pytest.raises(DomainError, match="requires single chain"):
        cyclic_multiples_check(ZZ(3), TEN)
    with pytest.raises(DomainError, match="requires single chain"):
        cyclic_multiples_check(ZZ(13), TEN)


def test_midy_examples():
    r = midy_complement_check(ZZ(7), TEN)
    assert r.l == 3 and r.ok
    first = next(s for s in r.samples if s.numerator == 1)
    assert ints(first.first_half) == [1, 4, 2] and ints(first.second_half) == [8, 5, 7]
    assert ints(first.sums) == [9, 9, 9]
    r = midy_complement_check(ZZ(17), TEN)
    first = next(s for s in r.samples if s.numerator == 1)
    assert r.l == 8 and r.ok
    assert ints(first.first_half) == [0, 5, 8, 8, 2, 3, 5, 2]
    assert ints(first.sums) == [9] * 8
    r = midy_complement_check(X**2 + 1, X)
    assert r.l == 2 and r.ok
    first = next(s for s in r.samples if s.numerator == F5.one)
    assert first.sums == (F5.zero, F5.zero) and first.represents == "zero"


def test_midy_without_witness():
    r = midy_complement_check(ZZ(3), TEN)
    assert r.l is None and not r.has_witness


def test_square_split_examples():
    r = square_split_check(ZZ(7), TEN, 142857, 1)
    assert (r.high, r.low, r.total) == (20408, 122449, 142857)
    assert r.ok
    r = square_split_check(ZZ(27), TEN, 37, 1)
    assert (r.multiple, r.high, r.low, r.total, r.quotient) == (1369, 1, 369, 370, 10)
    assert r.ok
    r = square_split_check(ZZ(7), TEN, 2, 1)
    assert r.degenerate and r.total == 285714 and r.quotient == 2


def test_unity_examples():
    r = unity_recurring_witness(TEN)
    assert r.found and ints(r.witness) == [9]
    r = unity_recurring_witness(ZZ(2))
    assert r.found and ints(r.witness) == [1]
    r = unity_recurring_witness(X, max_period=3)
    assert not r.found and r.complete and r.periods_searched == (1, 2, 3)
    assert r.strings_examined == 5 + 25 + 125


def test_unity_budget_gives_partial_report():
    r = unity_recurring_witness(X**2, max_period=3, budget=1000)
    assert not r.found and not r.complete


def test_same_period_examples():
    r = same_period_for_divisors_check([ZZ(7), ZZ(13)], TEN)
    assert r.prime_orders == (6, 6) and r.order == 6 and r.ok
    assert set(r.divisor_orders.values()) == {6}
    r = same_period_for_divisors_check([ZZ(3), ZZ(7)], TEN)
    assert r.order == r.lcm == 6 and r.ok
    r = same_period_for_divisors_check([ZZ(41)], TEN)
    assert r.order == r.prime_orders[0] == 5


# -- properties ---------------------------------------------------------------------------------

coprime = st.integers(2, 500).filter(lambda d: d % 2 and d % 5)


@given(coprime, st.integers(1, 10**6))
def test_cycle_length_is_the_order(d, t):
    t %= d
    if t == 0 or extended_gcd(ZZ(t), ZZ(d)).g != 1:
        t = 1
    rn = recurring_expansion(ZZ(t), ZZ(d), TEN)
    assert not rn.preperiod_digits
    assert rn.period == multiplicative_order(TEN, ZZ(d))


@given(coprime, st.integers(1, 60))
def test_expansion_matches_oracles(d, n):
    assert ints(expansion_sequence(ZZ(1), ZZ(d), TEN, n)) == decimal_digits(1, d, n)
    assert expansion_by_quotients(ZZ(d), TEN, n) == expansion_sequence(ZZ(1), ZZ(d), TEN, n)


def test_chain_totals_integers():
    for d in range(2, 201):
        if d % 2 and d % 5:
            assert chains(ZZ(d), TEN).total == d


def test_chain_totals_polynomials():
    for deg in (1, 2, 3):
        for low in itertools.product(range(5), repeat=deg):
            if low[0] == 0:
                continue  # shares the factor X with the base
            d = F5(list(low) + [1])
            assert chains(d, X).total == residue_count(d)


@given(coprime)
def test_repetend_value_reduces_to_one_over_d(d):
    r = repetend(ZZ(d), TEN)
    rn = RecurringNumeral(TEN, (), (), r.digits)
    num, den = value_of_recurring(rn)
    assert reduce_fraction(num, den) == (1, d)
    assert ZZ(d) * r.value == TEN**r.period - 1
    assert len(r.digits) == r.period


@given(coprime, st.integers(1, 10**4), st.integers(0, 30))
def test_shift_law(d, t, i):
    t %= d
    rn = recurring_expansion(ZZ(t), ZZ(d), TEN)
    shifted = recurring_expansion(canonical_residue(ZZ(10**i * t), ZZ(d)), ZZ(d), TEN)
    e = rn.period
    rot = rn.repetend_digits[i % e:] + rn.repetend_digits[: i % e]
    assert shifted.repetend_digits == rot
    assert canonical_rotation(shifted.repetend_digits) == canonical_rotation(rn.repetend_digits)


@given(st.sampled_from([7, 11, 13, 17, 19, 23, 29, 47, 59, 61, 73, 97, 101]))
def test_midy_holds_for_even_period_primes(p):
    r = midy_complement_check(ZZ(p), TEN)
    if multiplicative_order(TEN, ZZ(p)) % 2 == 0:
        assert r.l is not None and r.ok
    else:
        assert r.l is None


@given(st.sampled_from([7, 17, 19, 23, 29, 47, 59, 61, 97]))
def test_full_period_primes_give_cyclic_numbers(p):
    assert cyclic_multiples_check(ZZ(p), TEN).ok


@given(st.sampled_from([3, 7, 11, 13, 27, 37, 41, 101]), st.integers(1, 400), st.integers(1, 3))
def test_square_split_sum_divisible(d, k, l):
    r = square_split_check(ZZ(d), TEN, k, l)
    assert r.divisible and r.ok
