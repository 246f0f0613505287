"""
Steenrod squares: Adem relations, the Wu formula and Stiefel manifolds
======================================================================
"""

from linesplit.steenrod import SqExpr, adem_reduce, sq2_cpm, sq_stiefel, sq_wu

# Reduce composites to admissible monomials
for word in ("Sq2Sq3", "Sq3Sq2", "Sq2Sq2", "Sq2Sq1Sq2"):
    print(f"{word:10s} = {adem_reduce(SqExpr.parse(word))}")

# Sq^2 on mod-2 Chern classes of the universal bundle
for m in (4, 5):
    print(f"Sq^2 b_{m - 1} =", sq_wu(1, m - 1))

# Sq^(2j) on the generators f_(2i+1) of the Stiefel manifold W(m, 3)
m = 9
i = m - 3
print(f"m = {m}: Sq^2 f_{2 * i + 1} has coefficient {sq_stiefel(1, i, m)}, "
      f"Sq^4 f_{2 * i + 1} has coefficient {sq_stiefel(2, i, m)}")

# On CP^m, Sq^2 u^k = k u^(k+1) mod 2
print("Sq^2 on u^1..u^5 in CP^6:", [sq2_cpm(k, 6) for k in range(1, 6)])
