"""
Divisibility rules from weighted digit sums
===========================================

Any divisor coprime to the base has a rule of the form "weight the digits
by powers of k and add".  This walk-through derives k for a few divisors
and runs the forward, reverse and chunked tests.
"""

from euclidiv import ZZ, chunked_reduce, forward_reduce, general_divisibility, reverse_k, reverse_reduce

ten = ZZ(10)

# The reverse k-value is the inverse of the base, in its smallest form.
for d in (7, 13, 17, 19, 49):
    print(d, "->", reverse_k(ZZ(d), ten).value)

# 7: k = -2, so the test is "drop the last digit, subtract twice it".
v = reverse_reduce(ZZ(2023), ZZ(7), ten)
print("2023 by 7:", v.divisible, "weighted sum", v.reduced_value)

# Forward test by 9 keeps folding the digit sum until it is short.
v = forward_reduce(ZZ(987654321987), ZZ(9), ten)
print("trail:", [int(t.payload) for t in v.trail], "residue", v.residue)

# Blocks of three digits: 1000 = -1 mod 7, 11 and 13, so blocks alternate in sign.
v = chunked_reduce(ZZ(123580457), ZZ(7 * 11 * 13), ten, (3, 6))
for block, weight in v.parts:
    print(f"  block {block} weight {weight}")
print("alternating sum", v.reduced_value, "divisible", v.divisible)

# Divisors sharing primes with the base only need a few trailing digits.
v = general_divisibility(ZZ(123459000), ZZ(8 * 125 * 7), ten)
for part in v.parts:
    print(f"  modulus {part.modulus}: digits {part.digits_checked}, ok={part.divisible}")
print("combined residue", v.residue)
