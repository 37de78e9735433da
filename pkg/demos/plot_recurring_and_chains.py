"""
Recurring expansions and digit chains
=====================================

Dividing by d over and over cycles through remainders.  The cycle gives the
repeating block of a/d, and the blocks for all a split into chains.
"""

from euclidiv import ZZ, chains, cyclic_multiples_check, midy_complement_check, recurring_expansion, repetend

ten = ZZ(10)

for a, d in ((1, 7), (5, 12), (22, 7), (1, 81)):
    rn = recurring_expansion(ZZ(a), ZZ(d), ten)
    pre = "".join(str(x) for x in rn.preperiod_digits)
    rep = "".join(str(x) for x in rn.repetend_digits)
    print(f"{a}/{d} = {''.join(map(str, rn.integer_digits)) or '0'}.{pre}({rep})")

# 1/7 has the longest possible block, so every multiple is a rotation.
r = repetend(ZZ(7), ten)
print("repetend of 7:", r.value, "period", r.period)
cyc = cyclic_multiples_check(ZZ(7), ten)
for row in cyc.multiples:
    print("  ", "".join(map(str, row)))
print("all rotations:", cyc.all_rotations, "times 7:", cyc.times_divisor)

# 13 has two chains of six digits, plus the lone 9 from 13/13.
census = chains(ZZ(13), ten)
for c in census.chains:
    print("  chain", "".join(map(str, c.digits)))
print("entries (length, count):", census.entries, "total", census.total)

# Even periods split into two halves that add to all nines.
report = midy_complement_check(ZZ(17), ten)
print("midy witness l =", report.l, "all samples ok:", report.ok)
