# Shuffle-type product formulas: a product of two values is an integer
# binomial combination of deeper values, exactly.

from fractions import Fraction

from dmzv import fkmt_value
from dmzv.rationals import binomial

# depth (1,1): fkmt(-a) * fkmt(-b) = sum over i+j=b of (-1)^i C(b,i) fkmt(-a-i, -j)
a, b = 2, 3
lhs = fkmt_value((a,)) * fkmt_value((b,))
rhs = Fraction(0)
for i in range(b + 1):
    j = b - i
    term = binomial(b, i) * fkmt_value((a + i, j))
    rhs += -term if i % 2 else term
print(f"fkmt(-{a}) * fkmt(-{b}) = {lhs}")
print(f"as a combination of depth-2 values: {rhs}")
assert lhs == rhs

# depth (1,2): the same mechanism one level deeper
a, (b, c) = 1, (2, 1)
lhs = fkmt_value((a,)) * fkmt_value((b, c))
rhs = Fraction(0)
for i1 in range(b + 1):
    for i2 in range(c + 1):
        coeff = binomial(b, i1) * binomial(c, i2)
        if (i1 + i2) % 2:
            coeff = -coeff
        rhs += coeff * fkmt_value((a + i1 + i2, b - i1, c - i2))
print(f"\nfkmt(-{a}) * fkmt(-{b},-{c}) = {lhs}")
print(f"as a combination of depth-3 values: {rhs}")
assert lhs == rhs

# the smallest instance, worth seeing in the raw:
print(f"\nfkmt(0)^2 = {fkmt_value((0,)) ** 2} = fkmt(0,0) = {fkmt_value((0, 0))}")
