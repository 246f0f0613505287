"""
Finitely generated abelian groups via Smith normal form
=======================================================
"""

from linesplit.algebra import AbelianGroup, IntMatrix, cokernel_group, ext, has_n_torsion, is_surjective, smith_normal_form

A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
D, U, V = smith_normal_form(A)
print("invariant factors:", D.diagonal())
assert U @ A @ V == D

# Z^3 modulo the columns of A
print("cokernel:", cokernel_group(A))

G = AbelianGroup(1, (2, 12))
print(G, "has 3-torsion:", has_n_torsion(G, 3), " 5-torsion:", has_n_torsion(G, 5))
print("Ext(G, Z) =", ext(G))

# A map Z -> Z/2 + Z/2 cannot be onto, the diagonal Z^2 -> Z/2 + Z/2 is
target = AbelianGroup(0, (2, 2))
print(is_surjective(IntMatrix.from_rows([[1], [1]]), target), is_surjective(IntMatrix.identity(2), target))
