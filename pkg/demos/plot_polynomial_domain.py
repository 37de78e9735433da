"""
The same tests over polynomials
===============================

Everything above works in F_p[X] with base X.  Dividing by X - c is then
the factor theorem, and recurring expansions of 1/d have periods given by
the order of X modulo d.
"""

from euclidiv import polynomials, recurring_expansion, reverse_k, reverse_reduce
from euclidiv.divtest import factor_theorem_check
from euclidiv.period import multiplicative_order

F5 = polynomials(5)
x = F5.x

s = F5.parse("x^4+3x^2+2x+4")
for c in range(1, 5):
    d = x - c
    v = reverse_reduce(s, d, x)
    print(f"X-{c}: k={reverse_k(d, x).value} divisible={v.divisible} s({c})={s.evaluate(c)}")
    assert factor_theorem_check(s, c)

d = F5.parse("x^2+2")
rn = recurring_expansion(F5.one, d, x)
print("1/(x^2+2) repeats", [str(t) for t in rn.repetend_digits])
print("order of X mod x^2+2:", multiplicative_order(x, d))
