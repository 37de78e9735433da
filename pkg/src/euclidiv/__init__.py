"""Divisibility tests, recurring expansions and period statistics over Euclidean domains.

Three domains are built in: the integers ``ZZ``, the Gaussian integers
``GAUSS`` and ``polynomials(p)`` for F_p[X].  Elements are made by calling
the domain tag, e.g. ``ZZ(7)``, ``GAUSS((2, 1))`` or ``polynomials(5).x``.
"""

from .census import (
    PrimeClass,
    artin_constant,
    classify_prime,
    density_references,
    residual_index_histogram,
    sieve_primes,
    wieferich_search,
)
from .digits import Numeral, RecurringNumeral, format_numeral, from_digits, parse_numeral, to_digits
from .divtest import (
    chunked_reduce,
    factor_theorem_check,
    forward_k,
    forward_reduce,
    general_divisibility,
    k_from_power_relation,
    k_progression,
    reverse_k,
    reverse_reduce,
)
from .domain import (
    GAUSS,
    ZZ,
    DomainError,
    Element,
    NotInvertibleError,
    ParseError,
    canonical_residue,
    check_axioms,
    divide,
    extended_gcd,
    factor,
    minimal_representative,
    mod_inverse,
    parse_element,
    polynomials,
    valuation,
)
from .period import lte_check, multiplicative_order, period_of_d, prime_power_period
from .recurring import (
    chains,
    cyclic_multiples_check,
    midy_complement_check,
    recurring_expansion,
    repetend,
    same_period_for_divisors_check,
    square_split_check,
    unity_recurring_witness,
    value_of_recurring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
