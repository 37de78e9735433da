"""
Periods of prime powers and Wieferich primes
============================================

The period of 1/p^n stays flat for a while and then grows by a factor of p
at each step.  Primes where it stays flat for longer than usual are the
Wieferich primes of the base.
"""

from euclidiv import GAUSS, ZZ, lte_check, period_of_d, prime_power_period
from euclidiv.census import wieferich_search

ten = ZZ(10)

for p in (3, 7, 487):
    pp = prime_power_period(ZZ(p), 3, ten)
    print(f"p={p}: g={pp.g} levels={pp.q} formula={pp.q_formula}")

# The period of a composite is the lcm over its prime powers.
res = period_of_d(ZZ(2 * 3 * 3 * 7 * 41 + 1), ten)
print("period of", res.divisor, "is", res.period)

# Lifting the exponent: v_p(x^m - y^m) from v_p(x - y) and v_p(m).
print(lte_check(ZZ(10), ZZ(1), 21, ZZ(3)))

# The same lifting works over the Gaussian integers.
pi = GAUSS((2, 1))
print(prime_power_period(pi, 3, GAUSS((3, 0))))

print("base 10 Wieferich primes below 10^4:", wieferich_search(10**4, 10))
print("base 2 below 4000:", wieferich_search(4000, 2))
