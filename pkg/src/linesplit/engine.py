"""Space profiles, hypothesis checks and the splitting decision router.

A :class:`SpaceProfile` holds the cohomological data of the base ``X`` (a CW
complex of dimension ``2m``) that any hypothesis may ask about: groups
``H^d(X; Z)``, ``H^d(X; Z/2)``, ``H^d(X; Z/4)``, the maps ``rho_2``, ``Sq^2``
and the Bockstein ``delta`` as integer matrices, and a few asserted flags for
manifolds.  Anything the profile does not supply is reported as missing
rather than guessed.

:func:`decide` picks the first route (a sufficient criterion for the
given ``r`` and parity of ``m``) whose hypotheses hold, then evaluates the
virtual Chern classes that route names.  Indices follow the convention
``i -> c_{m+1-i}``, so ``i = 1`` is the top class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .algebra import (
    TRIVIAL,
    AbelianGroup,
    IntMatrix,
    cyclic,
    has_n_torsion,
    is_surjective,
    is_well_defined,
)
from .chern import ChernVector, LineBundle, virtual_total
from .ring import RingProfile, cpm_ring
from .tables import pi_2m2

__all__ = [
    "FLAG_NAMES",
    "InsufficientData",
    "SpaceProfile",
    "SplitProblem",
    "HypothesisCheck",
    "Route",
    "ROUTES",
    "Splits",
    "Obstructed",
    "HypothesesNotMet",
    "Verdict",
    "profile_cpm",
    "check_hypothesis",
    "routes_for",
    "decide",
    "primary_obstruction",
    "span_decide",
    "verdict_from_dict",
    "problem_lines",
    "CONDITION_IDS",
]

FLAG_NAMES = (
    "closed_manifold",
    "simply_connected",
    "w2_nonzero",
    "H2_no_2torsion",
    "H3_trivial",
    "three_connected",
)

COEFFICIENTS = (0, 2, 4)  # 0 stands for Z


class InsufficientData(LookupError):
    """The profile does not carry a group, map or flag some check needs."""


def _coeff_name(k: int) -> str:
    return "Z" if k == 0 else f"Z/{k}"


@dataclass(frozen=True, eq=False)
class SpaceProfile:
    """Cohomological data of a ``2m``-dimensional base.

    ``cohomology[(d, k)]`` is ``H^d(X; Z/k)`` (``k = 0`` for integers).  Even
    integral degrees default to the ring's groups; everything above ``2m`` or
    below 0 is trivial.  ``rho2[d]``, ``sq2[d]`` and ``delta[d]`` are the
    matrices of ``H^d(Z) -> H^d(Z/2)``, ``H^d(Z/2) -> H^{d+2}(Z/2)`` and
    ``H^d(Z/2) -> H^{d+1}(Z)``; a map between two groups one of which is
    trivial never needs to be given.
    """

    m: int
    ring: RingProfile
    cohomology: Mapping[tuple[int, int], AbelianGroup] = field(default_factory=dict)
    rho2: Mapping[int, IntMatrix] = field(default_factory=dict)
    sq2: Mapping[int, IntMatrix] = field(default_factory=dict)
    delta: Mapping[int, IntMatrix] = field(default_factory=dict)
    flags: Mapping[str, bool] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.ring.m != self.m:
            raise ValueError(f"ring has top degree {self.ring.m}, profile says m = {self.m}")
        for (d, k), g in self.cohomology.items():
            if k not in COEFFICIENTS:
                raise ValueError(f"unsupported coefficients Z/{k}")
            if not isinstance(g, AbelianGroup):
                raise TypeError(f"H^{d}({_coeff_name(k)}) must be an AbelianGroup")
            if k == 0 and d % 2 == 0 and 0 <= d <= 2 * self.m and g != self.ring.groups[d // 2]:
                raise ValueError(f"H^{d}(Z) = {g} disagrees with the ring ({self.ring.groups[d // 2]})")
        for name in self.flags:
            if name not in FLAG_NAMES:
                raise ValueError(f"unknown flag {name!r}; known flags: {', '.join(FLAG_NAMES)}")
        for label, maps, src, dst in (
            ("rho2", self.rho2, (0, 0), (0, 2)),
            ("sq2", self.sq2, (0, 2), (2, 2)),
            ("delta", self.delta, (0, 2), (1, 0)),
        ):
            for d, M in maps.items():
                source = self._known_group(d + src[0], src[1])
                target = self._known_group(d + dst[0], dst[1])
                if source is None or target is None:
                    raise ValueError(f"{label} in degree {d} given without its source and target groups")
                if M.shape != (target.ngens, source.ngens):
                    raise ValueError(f"{label} in degree {d} has shape {M.shape}, expected "
                                     f"{(target.ngens, source.ngens)}")
                if not is_well_defined(M, source, target):
                    raise ValueError(f"{label} in degree {d} does not respect the relations of {source}")

    def _known_group(self, d: int, k: int) -> AbelianGroup | None:
        if d < 0 or d > 2 * self.m:
            return TRIVIAL
        if (d, k) in self.cohomology:
            return self.cohomology[(d, k)]
        if k == 0 and d % 2 == 0:
            return self.ring.groups[d // 2]
        return None

    def group(self, d: int, k: int = 0) -> AbelianGroup:
        g = self._known_group(d, k)
        if g is None:
            raise InsufficientData(f"H^{d}(X;{_coeff_name(k)}) not supplied")
        return g

    def _map(self, table: Mapping[int, IntMatrix], label: str, d: int, source, target) -> IntMatrix:
        if d in table:
            return table[d]
        src, dst = self.group(*source), self.group(*target)
        if src.is_trivial() or dst.is_trivial():
            return IntMatrix.zeros(dst.ngens, src.ngens)
        raise InsufficientData(f"{label} on H^{d} not supplied")

    def rho2_map(self, d: int) -> IntMatrix:
        return self._map(self.rho2, "rho2", d, (d, 0), (d, 2))

    def sq2_map(self, d: int) -> IntMatrix:
        return self._map(self.sq2, "Sq^2", d, (d, 2), (d + 2, 2))

    def delta_map(self, d: int) -> IntMatrix:
        return self._map(self.delta, "delta", d, (d, 2), (d + 1, 0))

    def flag(self, name: str) -> bool:
        if name not in FLAG_NAMES:
            raise ValueError(f"unknown flag {name!r}")
        if name not in self.flags:
            raise InsufficientData(f"flag {name} not asserted")
        return bool(self.flags[name])

    # -- JSON ---------------------------------------------------------------

    def to_dict(self) -> dict:
        def grp(g: AbelianGroup) -> dict:
            return {"free_rank": str(g.free_rank), "torsion": [str(d) for d in g.invariant_factors]}

        def mat(M: IntMatrix) -> dict:
            return {"rows": str(M.rows), "cols": str(M.cols),
                    "entries": [[str(x) for x in row] for row in M.to_rows()]}

        return {
            "m": str(self.m),
            "name": self.name,
            "ring": {
                "groups": [grp(g) for g in self.ring.groups],
                "products": {
                    f"{a},{b}": [[[str(x) for x in v] for v in row] for row in consts]
                    for (a, b), consts in sorted(self.ring.products.items())
                },
            },
            "cohomology": {
                _coeff_name(k): {str(d): grp(g) for (d, kk), g in sorted(self.cohomology.items()) if kk == k}
                for k in COEFFICIENTS
            },
            "maps": {
                "rho2": {str(d): mat(M) for d, M in sorted(self.rho2.items())},
                "sq2": {str(d): mat(M) for d, M in sorted(self.sq2.items())},
                "delta": {str(d): mat(M) for d, M in sorted(self.delta.items())},
            },
            "flags": dict(sorted(self.flags.items())),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SpaceProfile":
        def grp(obj) -> AbelianGroup:
            return AbelianGroup(int(obj.get("free_rank", 0)), tuple(int(d) for d in obj.get("torsion", ())))

        def mat(obj) -> IntMatrix:
            if isinstance(obj, Mapping):
                rows, cols = int(obj["rows"]), int(obj["cols"])
                entries = obj.get("entries", [])
            else:
                entries = obj
                rows = len(entries)
                cols = len(entries[0]) if entries else 0
            return IntMatrix.from_rows([[int(x) for x in row] for row in entries], cols) if rows else IntMatrix.zeros(0, cols)

        m = int(data["m"])
        ring_data = data["ring"]
        groups = tuple(grp(g) for g in ring_data["groups"])
        products = {}
        for key, consts in ring_data.get("products", {}).items():
            a, b = (int(x) for x in key.split(","))
            products[(a, b)] = [[[int(x) for x in v] for v in row] for row in consts]
        ring = RingProfile(m, groups, products)
        names = {"Z": 0, "Z/2": 2, "Z/4": 4}
        cohomology = {}
        for cname, degrees in data.get("cohomology", {}).items():
            if cname not in names:
                raise ValueError(f"unsupported coefficient system {cname!r}")
            for d, g in degrees.items():
                cohomology[(int(d), names[cname])] = grp(g)
        maps = data.get("maps", {})
        return cls(
            m=m,
            ring=ring,
            cohomology=cohomology,
            rho2={int(d): mat(M) for d, M in maps.get("rho2", {}).items()},
            sq2={int(d): mat(M) for d, M in maps.get("sq2", {}).items()},
            delta={int(d): mat(M) for d, M in maps.get("delta", {}).items()},
            flags={k: bool(v) for k, v in data.get("flags", {}).items()},
            name=str(data.get("name", "")),
        )


def profile_cpm(m: int) -> SpaceProfile:
    """Profile of ``CP^m``: ``Z``, ``Z/2``, ``Z/4`` in even degrees, nothing in odd ones."""
    if m < 1:
        raise ValueError("CP^m needs m >= 1")
    cohomology = {}
    rho2, sq2 = {}, {}
    for d in range(2 * m + 1):
        even = d % 2 == 0
        cohomology[(d, 0)] = AbelianGroup(1) if even else TRIVIAL
        cohomology[(d, 2)] = cyclic(2) if even else TRIVIAL
        cohomology[(d, 4)] = cyclic(4) if even else TRIVIAL
        if even:
            rho2[d] = IntMatrix.from_rows([[1]])
            if d + 2 <= 2 * m:
                sq2[d] = IntMatrix.from_rows([[(d // 2) % 2]])
    flags = {
        "closed_manifold": True,
        "simply_connected": True,
        "w2_nonzero": m % 2 == 0,  # w_2 = rho_2 c_1 = (m + 1) u
        "H2_no_2torsion": True,
        "H3_trivial": True,
        "three_connected": False,
    }
    return SpaceProfile(m, cpm_ring(m), cohomology, rho2, sq2, {}, flags, name=f"CP^{m}")


# ---------------------------------------------------------------------------
# Hypotheses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypothesisCheck:
    condition: str
    status: str  # "holds", "fails" or "insufficient"
    explanation: str

    def __bool__(self) -> bool:
        return self.status == "holds"


def _compose(*maps: IntMatrix) -> IntMatrix:
    out = maps[0]
    for M in maps[1:]:
        out = out @ M
    return out


def _onto(profile: SpaceProfile, composite: IntMatrix, d: int, k: int, text: str) -> tuple[bool, str]:
    target = profile.group(d, k)
    ok = is_surjective(composite, target)
    return ok, f"{text} {'is' if ok else 'is not'} onto H^{d}({_coeff_name(k)}) = {target}"


def _delta_sq2_rho2_onto(top: int):
    # delta Sq^2 rho_2 : H^{top-3}(Z) -> H^{top}(Z)
    def check(p: SpaceProfile):
        d = top(p.m) - 3
        comp = _compose(p.delta_map(d + 2), p.sq2_map(d), p.rho2_map(d))
        return _onto(p, comp, d + 3, 0, f"delta Sq^2 rho_2 from H^{d}(Z)")
    return check


def _sq2_rho2_onto(top: int):
    # Sq^2 rho_2 : H^{top-2}(Z) -> H^{top}(Z/2)
    def check(p: SpaceProfile):
        d = top(p.m) - 2
        comp = _compose(p.sq2_map(d), p.rho2_map(d))
        return _onto(p, comp, d + 2, 2, f"Sq^2 rho_2 from H^{d}(Z)")
    return check


def _sq2_onto(top: int):
    def check(p: SpaceProfile):
        d = top(p.m) - 2
        return _onto(p, p.sq2_map(d), d + 2, 2, f"Sq^2 from H^{d}(Z/2)")
    return check


def _no_torsion(top: int, n: int):
    def check(p: SpaceProfile):
        d = top(p.m)
        g = p.group(d, 0)
        bad = has_n_torsion(g, n)
        return not bad, f"H^{d}(Z) = {g} {'has' if bad else 'has no'} {n}-torsion"
    return check


def _torsion_free(top: int):
    def check(p: SpaceProfile):
        d = top(p.m)
        g = p.group(d, 0)
        ok = g.is_torsion_free()
        return ok, f"H^{d}(Z) = {g} {'is' if ok else 'is not'} torsion-free"
    return check


def _finite_no_2torsion(top: int):
    def check(p: SpaceProfile):
        d = top(p.m)
        g = p.group(d, 0)
        ok = g.is_finite() and not has_n_torsion(g, 2)
        return ok, f"H^{d}(Z) = {g} {'is' if ok else 'is not'} finite without 2-torsion"
    return check


def _no_n_torsion_from_pi(p: SpaceProfile):
    if p.m % 2 or p.m <= 4:
        return False, f"n = 12/|pi_(2m-2)(W(m,3))| is only used for even m > 4 (m = {p.m})"
    entry = pi_2m2(p.m)
    g = p.group(2 * p.m, 0)
    bad = has_n_torsion(g, entry.n)
    return not bad, (f"pi_(2m-2) = {entry.group}, n = {entry.n}; "
                     f"H^{2 * p.m}(Z) = {g} {'has' if bad else 'has no'} {entry.n}-torsion")


def _mod8_condition(p: SpaceProfile):
    m = p.m
    if m % 2:
        return False, f"only defined for even m (m = {m})"
    residue = m % 8
    if residue in (2, 6):
        return True, f"m = {m} is {residue} mod 8; nothing to check"
    k = 4 if residue == 0 else 2
    g = p.group(2 * m - 1, k)
    ok = g.is_trivial()
    return ok, f"m = {m} is {residue} mod 8 and H^{2 * m - 1}(Z/{k}) = {g}"


def _flag(name: str):
    def check(p: SpaceProfile):
        value = p.flag(name)
        return value, f"flag {name} = {value}"
    return check


_CONDITIONS: dict[str, tuple[str, Callable[[SpaceProfile], tuple[bool, str]]]] = {
    "delta_sq2_rho2_onto_H2m": (
        "H^2m(Z) is the image of delta Sq^2 rho_2 on H^(2m-3)(Z)", _delta_sq2_rho2_onto(lambda m: 2 * m)),
    "H2m_no_2torsion": ("H^2m(Z) has no 2-torsion", _no_torsion(lambda m: 2 * m, 2)),
    "sq2_rho2_onto_H2m-1_mod2": (
        "H^(2m-1)(Z/2) is the image of Sq^2 rho_2 on H^(2m-3)(Z)", _sq2_rho2_onto(lambda m: 2 * m - 1)),
    "sq2_onto_H2m_mod2": ("H^2m(Z/2) is the image of Sq^2 on H^(2m-2)(Z/2)", _sq2_onto(lambda m: 2 * m)),
    "delta_sq2_rho2_onto_H2m-2": (
        "H^(2m-2)(Z) is the image of delta Sq^2 rho_2 on H^(2m-5)(Z)", _delta_sq2_rho2_onto(lambda m: 2 * m - 2)),
    "H2m-2_no_2torsion": ("H^(2m-2)(Z) has no 2-torsion", _no_torsion(lambda m: 2 * m - 2, 2)),
    "mod8_condition": (
        "m = 0 mod 8 needs H^(2m-1)(Z/4) = 0, m = 4 mod 8 needs H^(2m-1)(Z/2) = 0", _mod8_condition),
    "H2m_no_n_torsion": ("H^2m(Z) has no n-torsion, n = 12/|pi_(2m-2)(W(m,3))|", _no_n_torsion_from_pi),
    "sq2_rho2_onto_H2m-3_mod2": (
        "H^(2m-3)(Z/2) is the image of Sq^2 rho_2 on H^(2m-5)(Z)", _sq2_rho2_onto(lambda m: 2 * m - 3)),
    "sq2_onto_H2m-2_mod2": ("H^(2m-2)(Z/2) is the image of Sq^2 on H^(2m-4)(Z/2)", _sq2_onto(lambda m: 2 * m - 2)),
    "H2m-1_finite_no_2torsion": (
        "H^(2m-1)(Z) is finite with no 2-torsion", _finite_no_2torsion(lambda m: 2 * m - 1)),
    "H2m_torsion_free": ("H^2m(Z) is torsion-free", _torsion_free(lambda m: 2 * m)),
}
for _name in FLAG_NAMES:
    _CONDITIONS[_name] = (f"asserted flag {_name}", _flag(_name))

CONDITION_IDS = tuple(_CONDITIONS)


def check_hypothesis(profile: SpaceProfile, condition_id: str) -> HypothesisCheck:
    if condition_id not in _CONDITIONS:
        raise KeyError(f"unknown condition {condition_id!r}")
    _, fn = _CONDITIONS[condition_id]
    try:
        ok, text = fn(profile)
    except InsufficientData as exc:
        return HypothesisCheck(condition_id, "insufficient", f"insufficient profile data: {exc}")
    return HypothesisCheck(condition_id, "holds" if ok else "fails", text)


# ---------------------------------------------------------------------------
# Routes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Route:
    """A sufficient criterion: if ``conditions(m)`` hold, splitting is equivalent to the vanishing of ``indices``."""

    name: str
    r: int
    kind: str  # "cw", "manifold" or "tangent"
    applies: Callable[[int], bool]
    conditions: Callable[[int], tuple[str, ...]]
    indices: tuple[int, ...]
    description: str = ""
    span_only: bool = False

    def degrees(self, m: int) -> tuple[int, ...]:
        return tuple(m + 1 - i for i in self.indices)


def _const(*ids: str):
    return lambda m: ids


ROUTES: tuple[Route, ...] = (
    Route("one-line", 1, "cw", lambda m: m >= 1, _const(), (1,),
          "one line splits off iff the top virtual class vanishes"),
    Route("two-lines-odd-bockstein", 2, "cw", lambda m: m >= 3 and m % 2 == 1,
          _const("delta_sq2_rho2_onto_H2m"), (2,),
          "m odd, H^2m(Z) generated by delta Sq^2 rho_2: only c_(m-1) matters"),
    Route("two-lines-odd", 2, "cw", lambda m: m >= 3 and m % 2 == 1,
          _const("H2m_no_2torsion"), (1, 2),
          "m odd, H^2m(Z) without 2-torsion"),
    Route("two-lines-even", 2, "cw", lambda m: m >= 4 and m % 2 == 0,
          _const("sq2_rho2_onto_H2m-1_mod2", "sq2_onto_H2m_mod2", "H2m_no_2torsion"), (1, 2),
          "m even, three conditions on H^(2m-1) and H^2m"),
    Route("three-lines-even-bockstein", 3, "cw", lambda m: m >= 6 and m % 2 == 0,
          _const("delta_sq2_rho2_onto_H2m-2", "mod8_condition", "H2m_no_n_torsion"), (1, 3),
          "m even, H^(2m-2)(Z) generated by delta Sq^2 rho_2: c_(m-1) does not matter"),
    Route("three-lines-even", 3, "cw", lambda m: m >= 6 and m % 2 == 0,
          _const("H2m-2_no_2torsion", "mod8_condition", "H2m_no_n_torsion"), (1, 2, 3),
          "m even, H^(2m-2)(Z) without 2-torsion"),
    Route("three-lines-odd", 3, "cw", lambda m: m >= 5 and m % 2 == 1,
          _const("sq2_rho2_onto_H2m-3_mod2", "sq2_onto_H2m-2_mod2", "H2m-2_no_2torsion",
                 "H2m-1_finite_no_2torsion", "H2m_torsion_free"), (1, 2, 3),
          "m odd, five conditions on H^(2m-3)..H^2m"),
    Route("two-lines-manifold", 2, "manifold", lambda m: m >= 3,
          lambda m: ("closed_manifold",) + (("w2_nonzero",) if m % 2 == 0 else ()), (1, 2),
          "closed manifold, w_2 != 0 when m is even"),
    Route("three-lines-manifold", 3, "manifold", lambda m: m >= 5,
          lambda m: ("closed_manifold", "simply_connected", "H2_no_2torsion")
          + (("sq2_onto_H2m-2_mod2", "H3_trivial") if m % 2 else ()), (1, 2, 3),
          "closed simply connected manifold, H_2 without 2-torsion (plus Sq^2 onto H^(2m-2) and H_3 = 0 for odd m)"),
    Route("two-lines-tangent-odd", 2, "tangent", lambda m: m >= 3 and m % 2 == 1,
          _const("closed_manifold"), (1, 2),
          "tangent bundle of a closed almost-complex manifold, m odd"),
    Route("two-lines-tangent-even", 2, "tangent", lambda m: m >= 4 and m % 2 == 0,
          _const("closed_manifold", "simply_connected", "w2_nonzero"), (1, 2),
          "tangent bundle of a closed simply connected almost-complex manifold with w_2 != 0"),
    Route("three-lines-tangent-even", 3, "tangent", lambda m: m >= 6 and m % 2 == 0,
          lambda m: ("closed_manifold", "H2_no_2torsion") + (("simply_connected",) if m % 4 == 0 else ()),
          (1, 2, 3),
          "tangent bundle, m even, H_2 without 2-torsion (and simply connected when 4 | m)"),
    Route("three-lines-span-3-connected", 3, "tangent", lambda m: m >= 5,
          _const("closed_manifold", "three_connected"), (1, 3),
          "three trivial lines in the tangent bundle of a 3-connected almost-complex manifold", span_only=True),
)

_RANGE = {1: 1, 2: 3, 3: 5}


def routes_for(r: int, m: int, tangent: bool = False, trivial_lines: bool = False) -> list[Route]:
    """Candidate routes in the order :func:`decide` tries them."""
    out = []
    for kind in ("cw", "manifold", "tangent"):
        if kind == "tangent" and not tangent:
            continue
        for route in ROUTES:
            if route.r != r or route.kind != kind or not route.applies(m):
                continue
            if route.span_only and not trivial_lines:
                continue
            out.append(route)
    return out


# ---------------------------------------------------------------------------
# Problems and verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SplitProblem:
    profile: SpaceProfile
    xi: ChernVector
    lines: tuple[LineBundle, ...]
    tangent: bool = False  # xi is the tangent bundle of an almost-complex manifold

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        if not 1 <= len(self.lines) <= 3:
            raise ValueError("between one and three line bundles are supported")
        if self.xi.ring != self.profile.ring:
            raise ValueError("xi does not live over the profile's ring")
        if self.xi.rank != self.profile.m:
            raise ValueError(f"xi has rank {self.xi.rank}, the base has dimension 2m with m = {self.profile.m}")
        for line in self.lines:
            if line.ring != self.profile.ring:
                raise ValueError("line bundle does not live over the profile's ring")

    @property
    def r(self) -> int:
        return len(self.lines)

    @property
    def m(self) -> int:
        return self.profile.m


def _s(x: int) -> str:
    return str(int(x))


def _vec(v) -> list[str]:
    return [_s(x) for x in v]


@dataclass(frozen=True)
class Splits:
    route: str
    checked_degrees: tuple[int, ...]
    certificate: tuple[tuple[int, ...], ...]  # x_0..x_{m-r}, the remaining virtual class
    conditions: tuple[str, ...] = ()
    flags_used: tuple[str, ...] = ()
    exit_code: int = field(default=0, init=False)

    def to_dict(self) -> dict:
        return {
            "verdict": "splits",
            "route": self.route,
            "checked_degrees": [_s(n) for n in self.checked_degrees],
            "certificate": [_vec(v) for v in self.certificate],
            "conditions": list(self.conditions),
            "flags_used": list(self.flags_used),
        }


@dataclass(frozen=True)
class Obstructed:
    route: str
    index: int  # i with the failing class c_{m+1-i}
    degree: int
    value: tuple[int, ...]
    checked_degrees: tuple[int, ...] = ()
    necessary_only: bool = False  # found by the unconditional necessary check, not the route's list
    flags_used: tuple[str, ...] = ()
    exit_code: int = field(default=1, init=False)

    def to_dict(self) -> dict:
        return {
            "verdict": "obstructed",
            "route": self.route,
            "index": _s(self.index),
            "degree": _s(self.degree),
            "value": _vec(self.value),
            "checked_degrees": [_s(n) for n in self.checked_degrees],
            "necessary_only": self.necessary_only,
            "flags_used": list(self.flags_used),
        }


@dataclass(frozen=True)
class HypothesesNotMet:
    failures: tuple[tuple[str, str, str, str], ...]  # (route, condition, status, explanation)
    exit_code: int = field(default=2, init=False)

    @property
    def conditions(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(f[1] for f in self.failures))

    def to_dict(self) -> dict:
        return {
            "verdict": "hypotheses_not_met",
            "failures": [
                {"route": route, "condition": cond, "status": status, "explanation": text}
                for route, cond, status, text in self.failures
            ],
        }


Verdict = Splits | Obstructed | HypothesesNotMet


def verdict_from_dict(data: Mapping) -> Verdict:
    kind = data["verdict"]
    if kind == "splits":
        return Splits(
            data["route"],
            tuple(int(n) for n in data["checked_degrees"]),
            tuple(tuple(int(x) for x in v) for v in data["certificate"]),
            tuple(data.get("conditions", ())),
            tuple(data.get("flags_used", ())),
        )
    if kind == "obstructed":
        return Obstructed(
            data["route"], int(data["index"]), int(data["degree"]),
            tuple(int(x) for x in data["value"]),
            tuple(int(n) for n in data.get("checked_degrees", ())),
            bool(data.get("necessary_only", False)),
            tuple(data.get("flags_used", ())),
        )
    if kind == "hypotheses_not_met":
        return HypothesesNotMet(tuple(
            (f["route"], f["condition"], f["status"], f["explanation"]) for f in data["failures"]
        ))
    raise ValueError(f"unknown verdict {kind!r}")


# ---------------------------------------------------------------------------
# Decisions
# ---------------------------------------------------------------------------

def _select_route(p: SplitProblem) -> tuple[Route | None, list[tuple[str, str, str, str]]]:
    trivial = all(p.profile.ring.is_zero(line.c1) for line in p.lines)
    failures: list[tuple[str, str, str, str]] = []
    for route in routes_for(p.r, p.m, p.tangent, trivial):
        checks = [check_hypothesis(p.profile, cid) for cid in route.conditions(p.m)]
        bad = [c for c in checks if not c]
        if not bad:
            return route, []
        failures.extend((route.name, c.condition, c.status, c.explanation) for c in bad)
    return None, failures


def decide(p: SplitProblem) -> Verdict:
    """Whether ``l_1 + ... + l_r`` embeds in ``xi``, by the first applicable route."""
    r, m = p.r, p.m
    if m < _RANGE[r]:
        return HypothesesNotMet((("range", "range", "fails", f"r = {r} needs m >= {_RANGE[r]}, got m = {m}"),))
    route, failures = _select_route(p)
    if route is None:
        if not failures:
            gate = "r = 3 with m even needs m >= 6" if r == 3 else f"no route for r = {r}, m = {m}"
            failures = [("range", "range", "fails", gate)]
        return HypothesesNotMet(tuple(failures))
    flags_used = tuple(c for c in route.conditions(m) if c in FLAG_NAMES)
    ring = p.profile.ring
    virtual = virtual_total(p.xi, p.lines)
    checked = route.degrees(m)
    for i in route.indices:
        n = m + 1 - i
        if not ring.is_zero(virtual[n]):
            return Obstructed(route.name, i, n, virtual[n], checked, False, flags_used)
    for i in range(1, r + 1):
        n = m + 1 - i
        if not ring.is_zero(virtual[n]):
            return Obstructed(route.name, i, n, virtual[n], checked, True, flags_used)
    return Splits(route.name, checked, tuple(virtual[: m - r + 1]), route.conditions(m), flags_used)


def primary_obstruction(p: SplitProblem) -> tuple[int, ...]:
    """``c_{m-r+1}(xi - l_1 - ... - l_r)``, the first obstruction to the lift."""
    if p.r > p.m:
        raise ValueError("more lines than the rank")
    return virtual_total(p.xi, p.lines)[p.m - p.r + 1]


def span_decide(profile: SpaceProfile, xi: ChernVector, r: int, tangent: bool = False) -> Verdict:
    """Whether ``xi`` has ``r`` linearly independent sections (all lines trivial)."""
    if not 1 <= r <= 3:
        raise ValueError("r must be 1, 2 or 3")
    zero = LineBundle(profile.ring, profile.ring.zero(1))
    return decide(SplitProblem(profile, xi, (zero,) * r, tangent))


def problem_lines(profile: SpaceProfile, classes: Sequence[Sequence[int]]) -> tuple[LineBundle, ...]:
    return tuple(LineBundle(profile.ring, tuple(c)) for c in classes)
