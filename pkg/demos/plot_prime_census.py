"""
A census of primes by period class
==================================

Primes coprime to 2B fall into three classes by the period of 1/p in base B.
Counting them with a segmented sieve and comparing against the heuristic
densities shows how close the shares land.
"""

import numpy as np

from euclidiv.census import artin_constant, census, residual_index_histogram, sieve_primes

primes = sieve_primes(10**6)
print(len(primes), "primes below 10^6, largest", primes[-1])
gaps = np.diff(primes)
print("mean gap", gaps.mean().round(3), "max gap", gaps.max())

report = census(10**6, 10)
for cls, frac in report.proportions.items():
    print(f"  {cls.value:13s} {report.counts[cls]:6d}  share {float(frac):.5f}")
for cls, delta in report.deltas.items():
    print(f"  {cls.value:13s} vs reference {delta['reference']:+.5f}")

# The truncated product converges quickly and brackets the constant.
for n in (10**2, 10**4, 10**6):
    est = artin_constant(n)
    print(f"N={n:>8}  value {est.value:.12f}  bound {est.error_bound:.2e}")

# How often is the period exactly (p - 1)/m?
h = residual_index_histogram(10**5, 10, 6)
print({("more" if k is None else k): v for k, v in h.buckets.items()})
