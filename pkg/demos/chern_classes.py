"""
Virtual Chern classes over complex projective space
====================================================

The class of ``xi - l_1 - ... - l_r`` is ``c(xi)`` divided by the line
factors.  Its top ``r`` components are the candidates for an obstruction.
"""

from linesplit import ChernVector, LineBundle, virtual_chern, virtual_chern_oracle
from linesplit.chern import virtual_total

# The tangent bundle of CP^3 has total class (1 + u)^4
m = 3
tangent = ChernVector.cpm(m, [4, 6, 4])
print("c(T CP^3) =", tangent.as_poly())

# Take away the line with first Chern class 2u
line = LineBundle.cpm(m, 2)
print("c(T - l)  =", [c[0] for c in virtual_total(tangent, [line])])

# The recurrence agrees with the slow inverse-product formula degree by degree
for n in range(m + 1):
    assert virtual_chern(tangent, [line], n) == virtual_chern_oracle(tangent, [line], n)

# Two copies of the tautological dual leave a nonzero class in degree 2
pair = [LineBundle.cpm(m, 1), LineBundle.cpm(m, 1)]
print("c(T - 2u) =", [c[0] for c in virtual_total(tangent, pair)])
