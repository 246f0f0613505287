"""
Deciding whether line bundles split off
=======================================

``decide`` picks the first criterion whose hypotheses the base satisfies,
then reads off the relevant virtual Chern classes.
"""

from linesplit import ChernVector, LineBundle, SplitProblem, decide, primary_obstruction, profile_cpm, span_decide
from linesplit.algebra import TRIVIAL, IntMatrix, Z, cyclic
from linesplit.engine import SpaceProfile
from linesplit.ring import RingProfile

# One line in the tangent bundle of CP^3
P = profile_cpm(3)
xi = ChernVector.cpm(3, [4, 6, 4])
print(decide(SplitProblem(P, xi, [LineBundle.cpm(3, 2)])))

# No pair of lines fits, and (u, u) already fails at the primary obstruction
pair = [LineBundle.cpm(3, 1), LineBundle.cpm(3, 1)]
print(decide(SplitProblem(P, xi, pair)))
print("primary obstruction:", primary_obstruction(SplitProblem(P, xi, pair)))

# CP^2 has nonzero Euler class, so its tangent bundle has no section
print(span_decide(profile_cpm(2), ChernVector.cpm(2, [3, 3]), 1))

# A hand-built base with H^6 = Z/2 generated by delta Sq^2 rho_2 on H^3
ring = RingProfile(3, (Z, TRIVIAL, TRIVIAL, cyclic(2)))
one = IntMatrix.from_rows([[1]])
X = SpaceProfile(3, ring, {(3, 0): Z, (3, 2): cyclic(2), (5, 2): cyclic(2)},
                 rho2={3: one}, sq2={3: one}, delta={5: one}, name="X")
trivial = ChernVector.trivial(ring)
verdict = span_decide(X, trivial, 2)
print(verdict.route, "checks degrees", verdict.checked_degrees)

# Without the Bockstein data every route is blocked, and the report says why
Y = SpaceProfile(3, ring, name="Y")
for route, condition, status, text in span_decide(Y, trivial, 2).failures:
    print(f"  {route:26s} {condition:26s} {status:12s} {text}")
