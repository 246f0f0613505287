import json
import random

import pytest

from linesplit.algebra import TRIVIAL, AbelianGroup, IntMatrix, Z, cyclic
from linesplit.chern import ChernVector, LineBundle, top_vanishing
from linesplit.engine import (
    CONDITION_IDS,
    HypothesesNotMet,
    InsufficientData,
    Obstructed,
    SpaceProfile,
    SplitProblem,
    Splits,
    check_hypothesis,
    decide,
    primary_obstruction,
    profile_cpm,
    routes_for,
    span_decide,
    verdict_from_dict,
)
from linesplit.ring import RingProfile, TruncatedPoly
from linesplit.symfun import cpm_split_admissible, schwarzenberger_check


def cp_problem(m, chern, lines, tangent=False):
    return SplitProblem(profile_cpm(m), ChernVector.cpm(m, chern), tuple(LineBundle.cpm(m, z) for z in lines), tangent)


def sparse_ring(m, top):
    """Even cohomology ``Z`` in degree 0, ``top`` in degree ``2m``, nothing in between."""
    return RingProfile(m, (Z,) + (TRIVIAL,) * (m - 1) + (top,))


def top_only(ring, value, rank=None):
    m = ring.m
    return ChernVector.from_classes(ring, [()] * (m - 1) + [value], rank)


def zero_lines(ring, r):
    return tuple(LineBundle(ring, ()) for _ in range(r))


# -- profiles -----------------------------------------------------------------

def test_profile_cpm_contents():
    P = profile_cpm(4)
    assert P.group(8) == Z and P.group(7) == TRIVIAL and P.group(9) == TRIVIAL
    assert P.group(6, 4) == cyclic(4)
    assert P.sq2_map(2).to_rows() == [[1]] and P.sq2_map(4).to_rows() == [[0]]
    assert P.flag("w2_nonzero") and not profile_cpm(5).flag("w2_nonzero")
    assert P.delta_map(3).shape == (1, 0)  # H^3(Z/2) = 0 into H^4(Z) = Z


def test_profile_validation():
    ring = sparse_ring(3, cyclic(2))
    with pytest.raises(ValueError):
        SpaceProfile(3, ring, {(6, 0): Z})  # disagrees with the ring
    with pytest.raises(ValueError):
        SpaceProfile(3, ring, flags={"spin": True})
    with pytest.raises(ValueError):
        SpaceProfile(3, ring, {(5, 2): cyclic(2)}, delta={5: IntMatrix.from_rows([[1, 1]])})
    with pytest.raises(ValueError):
        SpaceProfile(2, ring)


def test_insufficient_data():
    P = SpaceProfile(3, sparse_ring(3, cyclic(2)))
    with pytest.raises(InsufficientData):
        P.group(5, 2)
    with pytest.raises(InsufficientData):
        P.flag("closed_manifold")
    check = check_hypothesis(P, "delta_sq2_rho2_onto_H2m")
    assert check.status == "insufficient" and not check
    with pytest.raises(KeyError):
        check_hypothesis(P, "no_such_condition")


def test_every_condition_runs_on_cpm():
    for m in (3, 4, 5, 6, 8):
        P = profile_cpm(m)
        for cid in CONDITION_IDS:
            assert check_hypothesis(P, cid).status in ("holds", "fails")


def test_hypotheses_on_cpm():
    assert check_hypothesis(profile_cpm(6), "H2m_no_2torsion")
    assert check_hypothesis(profile_cpm(6), "sq2_onto_H2m_mod2")
    assert check_hypothesis(profile_cpm(6), "mod8_condition")
    assert check_hypothesis(profile_cpm(8), "mod8_condition")
    assert not check_hypothesis(profile_cpm(5), "delta_sq2_rho2_onto_H2m")  # Z is not hit by a 2-torsion map


def test_torsion_conditions_on_custom_groups():
    P = SpaceProfile(6, sparse_ring(6, cyclic(3)))
    # m = 6 gives pi_(2m-2) = Z/3, so n = 4: Z/3 has no 4-torsion
    assert check_hypothesis(P, "H2m_no_n_torsion")
    assert check_hypothesis(P, "H2m_no_2torsion")
    assert not check_hypothesis(P, "H2m_torsion_free")
    Q = SpaceProfile(6, sparse_ring(6, cyclic(2)))
    assert not check_hypothesis(Q, "H2m_no_n_torsion")
    R = SpaceProfile(10, sparse_ring(10, cyclic(5)))
    assert check_hypothesis(R, "H2m_no_n_torsion")  # n = 12 for m = 10
    S = SpaceProfile(10, sparse_ring(10, cyclic(3)))
    assert not check_hypothesis(S, "H2m_no_n_torsion")


def bockstein_profile(delta=1, flags=None):
    """``m = 3`` with ``H^3 = Z``, ``H^6 = Z/2`` and ``delta Sq^2 rho_2`` of the given value."""
    ring = sparse_ring(3, cyclic(2))
    cohomology = {(3, 0): Z, (3, 2): cyclic(2), (5, 2): cyclic(2)}
    return SpaceProfile(
        3, ring, cohomology,
        rho2={3: IntMatrix.from_rows([[1]])},
        sq2={3: IntMatrix.from_rows([[1]])},
        delta={5: IntMatrix.from_rows([[delta]])},
        flags=flags or {},
        name="bockstein test space",
    )


def test_bockstein_condition():
    assert check_hypothesis(bockstein_profile(1), "delta_sq2_rho2_onto_H2m")
    zero = check_hypothesis(bockstein_profile(0), "delta_sq2_rho2_onto_H2m")
    assert zero.status == "fails" and "is not onto" in zero.explanation
    assert not check_hypothesis(bockstein_profile(1), "H2m_no_2torsion")


# -- decisions over CP^m --------------------------------------------------------

def test_cp2_three_not_split():
    v = decide(cp_problem(2, [3, 3], [1]))
    assert isinstance(v, Obstructed)
    assert v.route == "one-line" and v.degree == 2 and v.value == (1,)
    v = decide(cp_problem(2, [3, 3], [0]))
    assert isinstance(v, Obstructed) and v.value == (3,)


def test_cp3_tangent_splits_off_line():
    v = decide(cp_problem(3, [4, 6, 4], [2]))
    assert isinstance(v, Splits)
    assert v.certificate == ((1,), (2,), (2,))
    assert v.checked_degrees == (3,)


def test_cp3_tangent_no_pair():
    for a in range(-10, 11):
        for b in range(a, 11):
            v = decide(cp_problem(3, [4, 6, 4], [a, b]))
            assert isinstance(v, Obstructed)
            assert v.route == "two-lines-odd"


def test_range_gates():
    v = decide(cp_problem(4, [5, 10, 10, 5], [1, 1, 1]))
    assert isinstance(v, HypothesesNotMet)
    assert v.failures[0][0] == "range" and "m >= 5" in v.failures[0][3]
    v = decide(cp_problem(2, [3, 3], [1, 1]))
    assert isinstance(v, HypothesesNotMet) and "m >= 3" in v.failures[0][3]
    v = decide(cp_problem(3, [4, 6, 4], [1, 1, 1]))
    assert isinstance(v, HypothesesNotMet) and "m >= 5" in v.failures[0][3]


@pytest.mark.parametrize(
    "m,r,route",
    [
        (3, 1, "one-line"), (3, 2, "two-lines-odd"), (4, 2, "two-lines-even"), (5, 2, "two-lines-odd"),
        (5, 3, "three-lines-odd"), (6, 3, "three-lines-even"), (7, 3, "three-lines-odd"),
        (8, 3, "three-lines-even"), (12, 3, "three-lines-even"),
    ],
)
def test_cpm_routes(m, r, route):
    c = TruncatedPoly.linear(1, m) ** (m + 1)
    v = decide(cp_problem(m, c.coeffs[1:], [1] * r))
    assert v.route == route


def test_primary_obstruction():
    assert primary_obstruction(cp_problem(3, [4, 6, 4], [1, 1])) == (1,)
    assert primary_obstruction(cp_problem(3, [4, 6, 4], [2])) == (0,)
    assert primary_obstruction(cp_problem(2, [3, 3], [0])) == (3,)


def test_span_decide_on_cpm():
    v = span_decide(profile_cpm(1), ChernVector.cpm(1, [2]), 1)
    assert isinstance(v, Obstructed) and v.value == (2,)
    v = span_decide(profile_cpm(3), ChernVector.cpm(3, [0, 0, 0]), 2)
    assert isinstance(v, Splits)


def random_realizable(rng, m):
    """Total class of a sum of ``m`` random lines over ``CP^m``, with its roots."""
    roots = [rng.randint(-4, 4) for _ in range(m)]
    c = TruncatedPoly.one(m)
    for z in roots:
        c = c * TruncatedPoly.linear(z, m)
    return c, roots


def test_agreement_with_split_admissibility():
    rng = random.Random(11)
    seen = {0: 0, 1: 0}
    for _ in range(100):
        r = rng.randint(1, 3)
        m = rng.randint(2 * r, 9)
        c, roots = random_realizable(rng, m)
        if rng.random() < 0.5:
            lines = rng.sample(roots, r)
        else:
            lines = [rng.randint(-4, 4) for _ in range(r)]
        assert schwarzenberger_check(c)
        v = decide(cp_problem(m, c.coeffs[1:], lines))
        expected = cpm_split_admissible(c, lines, m).admissible
        assert isinstance(v, (Splits, Obstructed))
        assert (v.exit_code == 0) == expected
        seen[v.exit_code] += 1
    assert seen[0] > 10 and seen[1] > 10


def test_line_order_does_not_matter():
    rng = random.Random(5)
    for _ in range(40):
        m = rng.randint(5, 9)
        c, roots = random_realizable(rng, m)
        lines = [rng.randint(-3, 3) for _ in range(3)]
        verdicts = {json.dumps(decide(cp_problem(m, c.coeffs[1:], p)).to_dict(), sort_keys=True)
                    for p in (lines, lines[::-1], lines[1:] + lines[:1])}
        assert len(verdicts) == 1


def test_splits_implies_top_vanishing():
    rng = random.Random(9)
    for _ in range(60):
        m = rng.randint(3, 8)
        r = rng.randint(1, 2)
        c, roots = random_realizable(rng, m)
        p = cp_problem(m, c.coeffs[1:], roots[:r])
        v = decide(p)
        assert isinstance(v, Splits)
        assert top_vanishing(p.xi, p.lines, r)[0]


# -- decisions over custom profiles -----------------------------------------------

def test_bockstein_route_checks_only_c_m_minus_1():
    P = bockstein_profile(1)
    ring = P.ring
    xi = ChernVector.trivial(ring)
    v = decide(SplitProblem(P, xi, zero_lines(ring, 2)))
    assert isinstance(v, Splits)
    assert v.route == "two-lines-odd-bockstein" and v.checked_degrees == (2,)
    bad = top_only(ring, (1,))
    v = decide(SplitProblem(P, bad, zero_lines(ring, 2)))
    assert isinstance(v, Obstructed) and v.necessary_only and v.degree == 3


def test_no_route_reports_every_failure():
    v = decide(SplitProblem(bockstein_profile(0), ChernVector.trivial(sparse_ring(3, cyclic(2))),
                            zero_lines(sparse_ring(3, cyclic(2)), 2)))
    assert isinstance(v, HypothesesNotMet)
    routes = {f[0] for f in v.failures}
    assert routes == {"two-lines-odd-bockstein", "two-lines-odd", "two-lines-manifold"}
    assert "closed_manifold" in v.conditions
    statuses = {f[1]: f[2] for f in v.failures}
    assert statuses["closed_manifold"] == "insufficient"
    assert statuses["H2m_no_2torsion"] == "fails"


def test_manifold_route_by_flag():
    P = bockstein_profile(0, {"closed_manifold": True})
    xi = ChernVector.trivial(P.ring)
    v = decide(SplitProblem(P, xi, zero_lines(P.ring, 2)))
    assert isinstance(v, Splits)
    assert v.route == "two-lines-manifold" and v.flags_used == ("closed_manifold",)


def test_tangent_route_needs_tangent():
    ring = sparse_ring(6, cyclic(2))
    P = SpaceProfile(6, ring, flags={"closed_manifold": True, "H2_no_2torsion": True})
    xi = ChernVector.trivial(ring)
    v = decide(SplitProblem(P, xi, zero_lines(ring, 3)))
    assert isinstance(v, HypothesesNotMet)
    v = decide(SplitProblem(P, xi, zero_lines(ring, 3), tangent=True))
    assert isinstance(v, Splits) and v.route == "three-lines-tangent-even"
    assert v.flags_used == ("closed_manifold", "H2_no_2torsion")


def test_span_route_three_connected():
    ring = sparse_ring(5, cyclic(2))
    P = SpaceProfile(5, ring, flags={"closed_manifold": True, "three_connected": True})
    xi = ChernVector.trivial(ring)
    v = span_decide(P, xi, 3, tangent=True)
    assert isinstance(v, Splits)
    assert v.route == "three-lines-span-3-connected" and v.checked_degrees == (5, 3)
    assert isinstance(span_decide(P, xi, 3), HypothesesNotMet)


def test_routes_for_order():
    names = [r.name for r in routes_for(2, 5, tangent=True)]
    assert names == ["two-lines-odd-bockstein", "two-lines-odd", "two-lines-manifold", "two-lines-tangent-odd"]
    assert [r.name for r in routes_for(3, 5, True, True)][-1] == "three-lines-span-3-connected"


def test_problem_validation():
    P = profile_cpm(3)
    with pytest.raises(ValueError):
        SplitProblem(P, ChernVector.cpm(3, [4, 6, 4]), ())
    with pytest.raises(ValueError):
        SplitProblem(P, ChernVector.cpm(2, [3, 3]), (LineBundle.cpm(2, 1),))
    with pytest.raises(ValueError):
        SplitProblem(P, ChernVector.cpm(3, [4, 6, 0], rank=2), (LineBundle.cpm(3, 1),))


# -- serialization --------------------------------------------------------------

def test_verdict_round_trip():
    verdicts = [
        decide(cp_problem(3, [4, 6, 4], [2])),
        decide(cp_problem(3, [4, 6, 4], [1, 1])),
        decide(cp_problem(4, [5, 10, 10, 5], [1, 1, 1])),
        decide(SplitProblem(bockstein_profile(0), ChernVector.trivial(sparse_ring(3, cyclic(2))),
                            zero_lines(sparse_ring(3, cyclic(2)), 2))),
    ]
    for v in verdicts:
        data = json.loads(json.dumps(v.to_dict()))
        assert verdict_from_dict(data) == v


def test_large_values_serialize_as_strings():
    m = 9
    c = TruncatedPoly.linear(10**8, m) ** 9
    v = decide(cp_problem(m, c.coeffs[1:], [1]))
    assert isinstance(v, Obstructed)
    assert all(isinstance(x, str) for x in v.to_dict()["value"])
    assert int(v.to_dict()["value"][0]) == v.value[0]


def test_profile_round_trip():
    for P in (profile_cpm(5), bockstein_profile(1, {"closed_manifold": True})):
        Q = SpaceProfile.from_dict(json.loads(json.dumps(P.to_dict())))
        assert Q.to_dict() == P.to_dict()
        assert Q.ring == P.ring
    ring = RingProfile(2, (Z, AbelianGroup(2), Z), {(1, 1): [[(0,), (1,)], [(1,), (0,)]]})
    P = SpaceProfile(2, ring, flags={"closed_manifold": True})
    assert SpaceProfile.from_dict(P.to_dict()).ring == ring
