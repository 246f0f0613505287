"""Tabulated (co)homology of Eilenberg-MacLane spaces and homotopy of complex Stiefel manifolds.

Everything here is lookup data.  A query outside the tabulated window raises
:class:`OutOfTabulatedRange`; nothing is extrapolated.  Generator labels are
opaque strings (``"delta_2 Sq^2 iota_q^2"`` and so on), never evaluated.

Table names used throughout (and by the ``tables`` CLI subcommand):

``em-general``  integral (co)homology of ``K(G, q)`` for any f.g. ``G``, shifts 0..5
``em-z``        integral (co)homology of ``K(Z, q)``, shifts 0..6
``em-z-mod``    ``H^*(K(Z, q); Z/k)`` for ``k`` in 2, 4, 8, 3, shifts 0..5
``em-zk``       integral (co)homology of ``K(Z/k, q)`` for ``k`` in 2, 3, 4, 8, shifts 0..2
``stiefel2``    ``pi_{2(m-2)+i}(W(m, 2))``, ``i = 1..3``
``stiefel3``    ``pi_{2(m-3)+i}(W(m, 3))``, ``i = 1..5``
``pi``          ``pi_{2m-2}(W(m, 3))`` by ``m mod 3`` and ``m mod 8``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    TRIVIAL,
    AbelianGroup,
    Z,
    cyclic,
    ext,
    hom,
    n_torsion_subgroup,
    quotient_by_multiples,
)

__all__ = [
    "OutOfTabulatedRange",
    "EMEntry",
    "PiEntry",
    "Pi2m2",
    "em_homology",
    "em_cohomology",
    "stiefel_pi",
    "pi_2m2",
    "UCTCheck",
    "UCTReport",
    "verify_uct",
    "table_rows",
    "TABLE_NAMES",
    "MOD_K",
]


class OutOfTabulatedRange(LookupError):
    """Raised for any query the tables do not cover."""


MOD_K = (2, 4, 8, 3)  # column order of the mod-k table
ZK = (2, 3, 4, 8)  # column order of the K(Z/k, q) table


@dataclass(frozen=True)
class EMEntry:
    group: str
    q: int
    shift: int
    coefficients: str  # "Z" or "Z/k"
    kind: str  # "homology" or "cohomology"
    value: AbelianGroup
    generator_labels: tuple[str, ...] = ()
    table: str = ""

    def __post_init__(self):
        if bool(self.generator_labels) == self.value.is_trivial():
            raise ValueError(f"labels {self.generator_labels} inconsistent with value {self.value}")


def _label(g: AbelianGroup, *labels: str) -> tuple[str, ...]:
    return () if g.is_trivial() else labels


# ---------------------------------------------------------------------------
# K(G, q) for arbitrary G.  Row s is valid for q > s (q > 0 for s = 0).
# ---------------------------------------------------------------------------

def _sum(*gs: AbelianGroup) -> AbelianGroup:
    return gs[0].direct_sum(*gs[1:])


_GENERAL_HOMOLOGY: dict[int, tuple[str, Callable[[AbelianGroup], AbelianGroup]]] = {
    0: ("G", lambda G: G),
    1: ("0", lambda G: TRIVIAL),
    2: ("G/2G", lambda G: quotient_by_multiples(G, 2)),
    3: ("2G", lambda G: n_torsion_subgroup(G, 2)),
    4: ("G/2G + G/3G", lambda G: _sum(quotient_by_multiples(G, 2), quotient_by_multiples(G, 3))),
    5: ("2G + 3G", lambda G: _sum(n_torsion_subgroup(G, 2), n_torsion_subgroup(G, 3))),
}

_GENERAL_COHOMOLOGY: dict[int, tuple[str, Callable[[AbelianGroup], AbelianGroup]]] = {
    0: ("Hom(G,Z)", lambda G: hom(G)),
    1: ("Ext(G,Z)", lambda G: ext(G)),
    2: ("0", lambda G: TRIVIAL),
    3: ("Ext(G/2G,Z)", lambda G: ext(quotient_by_multiples(G, 2))),
    4: ("Ext(2G,Z)", lambda G: ext(n_torsion_subgroup(G, 2))),
    5: ("Ext(G/2G + G/3G,Z)", lambda G: ext(_sum(quotient_by_multiples(G, 2), quotient_by_multiples(G, 3)))),
}

_GENERAL_MIN_Q = {0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 6}

# ---------------------------------------------------------------------------
# K(Z, q): integral homology and cohomology, shifts 0..6.
# ---------------------------------------------------------------------------

_Z6 = AbelianGroup(0, (6,))
_Z2Z2 = AbelianGroup(0, (2, 2))

# shift: (minimum q, homology, cohomology, cohomology labels)
_EM_Z = {
    0: (1, Z, Z, ("iota_q",)),
    1: (2, TRIVIAL, TRIVIAL, ()),
    2: (3, cyclic(2), TRIVIAL, ()),
    3: (3, TRIVIAL, cyclic(2), ("delta_2 Sq^2 iota_q^2",)),
    4: (5, _Z6, TRIVIAL, ()),
    5: (5, TRIVIAL, _Z6, ("delta_2 Sq^4 iota_q^2", "delta_3 P^1_3 iota_q^3")),
    6: (7, _Z2Z2, TRIVIAL, ()),
}

# ---------------------------------------------------------------------------
# H^*(K(Z, q); Z/k), shifts 0..5; q as large as for the general table.
# ---------------------------------------------------------------------------

_EM_Z_MOD = {
    2: {
        0: (cyclic(2), "iota_q^2"),
        1: (TRIVIAL, None),
        2: (cyclic(2), "Sq^2 iota_q^2"),
        3: (cyclic(2), "Sq^3 iota_q^2"),
        4: (cyclic(2), "Sq^4 iota_q^2"),
        5: (cyclic(2), "Sq^5 iota_q^2"),
    },
    4: {
        0: (cyclic(4), "iota_q^4"),
        1: (TRIVIAL, None),
        2: (cyclic(2), "theta_2^2 Sq^2 iota_q^2"),
        3: (cyclic(2), "delta_2^2 Sq^2 iota_q^2"),
        4: (cyclic(2), "theta_2^2 Sq^4 iota_q^2"),
        5: (cyclic(2), "delta_2^2 Sq^4 iota_q^2"),
    },
    8: {
        0: (cyclic(8), "iota_q^8"),
        1: (TRIVIAL, None),
        2: (cyclic(2), "theta_2^3 Sq^2 iota_q^2"),
        3: (cyclic(2), "delta_2^3 Sq^2 iota_q^2"),
        4: (cyclic(2), "theta_2^3 Sq^4 iota_q^2"),
        5: (cyclic(2), "delta_2^3 Sq^4 iota_q^2"),
    },
    3: {
        0: (cyclic(3), "iota_q^3"),
        1: (TRIVIAL, None),
        2: (TRIVIAL, None),
        3: (TRIVIAL, None),
        4: (cyclic(3), "P^1_3 iota_q^3"),
        5: (cyclic(3), "beta_3 P^1_3 iota_q^3"),
    },
}

# ---------------------------------------------------------------------------
# K(Z/k, q), k in 2, 3, 4, 8: shifts 0..2.
# ---------------------------------------------------------------------------

_EM_ZK_HOMOLOGY = {
    0: lambda k: cyclic(k),
    1: lambda k: TRIVIAL,
    2: lambda k: cyclic(2) if k % 2 == 0 else TRIVIAL,
}
_EM_ZK_COHOMOLOGY = {
    0: lambda k: (TRIVIAL, None),
    1: lambda k: (cyclic(k), f"delta_{k} kappa_q"),
    2: lambda k: (TRIVIAL, None),
}


def _group_name(G: AbelianGroup) -> str:
    return str(G)


def _check_q(q: int, shift: int, min_q: int, table: str):
    if shift < 0:
        raise OutOfTabulatedRange(f"{table}: negative shift {shift}")
    if q < min_q:
        raise OutOfTabulatedRange(f"{table}: shift {shift} needs q >= {min_q}, got q = {q}")


def _pick_table(G: AbelianGroup, shift: int, coefficients: int, table: str | None) -> str:
    if table is not None:
        return table
    if coefficients:
        return "em-z-mod"
    if G == Z:
        return "em-z"
    if G.free_rank == 0 and len(G.invariant_factors) == 1 and G.invariant_factors[0] in ZK and shift <= 2:
        return "em-zk"
    return "em-general"


def em_homology(G: AbelianGroup, q: int, i: int, table: str | None = None) -> EMEntry:
    """``H_i(K(G, q); Z)``."""
    shift = i - q
    table = _pick_table(G, shift, 0, table)
    name = _group_name(G)
    if table == "em-z":
        if G != Z or shift not in _EM_Z:
            raise OutOfTabulatedRange(f"em-z: no row for G={name}, shift={shift}")
        min_q, value, _, _ = _EM_Z[shift]
        _check_q(q, shift, min_q, table)
        label = _GENERAL_HOMOLOGY[shift][0] if shift in _GENERAL_HOMOLOGY else f"H_(q+{shift})"
        return EMEntry(name, q, shift, "Z", "homology", value, _label(value, label), table)
    if table == "em-zk":
        k = _cyclic_order(G)
        if k not in ZK or shift not in _EM_ZK_HOMOLOGY:
            raise OutOfTabulatedRange(f"em-zk: no row for G={name}, shift={shift}")
        _check_q(q, shift, _GENERAL_MIN_Q[shift], table)
        value = _EM_ZK_HOMOLOGY[shift](k)
        return EMEntry(name, q, shift, "Z", "homology", value, _label(value, _GENERAL_HOMOLOGY[shift][0]), table)
    if table == "em-general":
        if shift not in _GENERAL_HOMOLOGY:
            raise OutOfTabulatedRange(f"em-general: no row for shift={shift}")
        _check_q(q, shift, _GENERAL_MIN_Q[shift], table)
        label, fn = _GENERAL_HOMOLOGY[shift]
        value = fn(G)
        return EMEntry(name, q, shift, "Z", "homology", value, _label(value, label), table)
    raise OutOfTabulatedRange(f"no homology in table {table!r}")


def _cyclic_order(G: AbelianGroup) -> int | None:
    if G.free_rank == 0 and len(G.invariant_factors) == 1:
        return G.invariant_factors[0]
    return None


def em_cohomology(G: AbelianGroup, q: int, i: int, coefficients: int = 0, table: str | None = None) -> EMEntry:
    """``H^i(K(G, q); Z)`` or, with ``coefficients=k``, ``H^i(K(Z, q); Z/k)``."""
    shift = i - q
    table = _pick_table(G, shift, coefficients, table)
    name = _group_name(G)
    coeff_name = f"Z/{coefficients}" if coefficients else "Z"
    if table == "em-z-mod":
        if G != Z or coefficients not in _EM_Z_MOD or shift not in _EM_Z_MOD[coefficients]:
            raise OutOfTabulatedRange(f"em-z-mod: no row for G={name}, Z/{coefficients}, shift={shift}")
        _check_q(q, shift, _GENERAL_MIN_Q[shift], table)
        value, label = _EM_Z_MOD[coefficients][shift]
        return EMEntry(name, q, shift, coeff_name, "cohomology", value, _label(value, label or ""), table)
    if coefficients:
        raise OutOfTabulatedRange(f"{table}: only integral cohomology is tabulated")
    if table == "em-z":
        if G != Z or shift not in _EM_Z:
            raise OutOfTabulatedRange(f"em-z: no row for G={name}, shift={shift}")
        min_q, _, value, labels = _EM_Z[shift]
        _check_q(q, shift, min_q, table)
        return EMEntry(name, q, shift, "Z", "cohomology", value, labels, table)
    if table == "em-zk":
        k = _cyclic_order(G)
        if k not in ZK or shift not in _EM_ZK_COHOMOLOGY:
            raise OutOfTabulatedRange(f"em-zk: no row for G={name}, shift={shift}")
        _check_q(q, shift, _GENERAL_MIN_Q[shift], table)
        value, label = _EM_ZK_COHOMOLOGY[shift](k)
        return EMEntry(name, q, shift, "Z", "cohomology", value, _label(value, label or ""), table)
    if table == "em-general":
        if shift not in _GENERAL_COHOMOLOGY:
            raise OutOfTabulatedRange(f"em-general: no row for shift={shift}")
        _check_q(q, shift, _GENERAL_MIN_Q[shift], table)
        label, fn = _GENERAL_COHOMOLOGY[shift]
        value = fn(G)
        return EMEntry(name, q, shift, "Z", "cohomology", value, _label(value, label), table)
    raise OutOfTabulatedRange(f"unknown table {table!r}")


# ---------------------------------------------------------------------------
# Complex Stiefel manifolds W(m, r), which are 2(m - r)-connected.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiEntry:
    m: int
    r: int
    index: int
    value: AbelianGroup
    source: str = ""

    def __post_init__(self):
        if self.index <= 2 * (self.m - self.r) and not self.value.is_trivial():
            raise ValueError("homotopy below the connectivity range must vanish")


@dataclass(frozen=True)
class Pi2m2:
    m: int
    group: AbelianGroup
    order: int
    n: int | None  # 12 / order, only for even m

    def __str__(self) -> str:
        return str(self.group)


# (m mod 8 classes) -> 2-primary part
_PI_2PRIMARY = {0: 4, 7: 4, 1: 2, 4: 2, 5: 2, 2: 1, 6: 1, 3: 8}

_STIEFEL2 = {
    # i: (m odd, m even), both for m > 2
    1: (Z, Z),
    2: (TRIVIAL, cyclic(2)),
    3: (Z, AbelianGroup(1, (2,))),
}

_STIEFEL3 = {
    # i: (m odd with m > 2, m even with m > 4); i = 4 is pi_{2m-2}
    1: (Z, Z),
    2: (cyclic(2), TRIVIAL),
    3: (AbelianGroup(1, (2,)), Z),
    5: (Z, Z),
}


def pi_2m2(m: int) -> Pi2m2:
    """``pi_{2m-2}(W(m, 3))`` for ``m > 4``."""
    if m <= 4:
        raise OutOfTabulatedRange(f"pi_(2m-2)(W(m,3)) is tabulated for m > 4, got m = {m}")
    orders = [_PI_2PRIMARY[m % 8]]
    if m % 3 == 0:
        orders.append(3)
    group = AbelianGroup.from_cyclic_orders(orders)
    order = group.order
    n = None
    if m % 2 == 0:
        if 12 % order:
            raise AssertionError(f"|pi_(2m-2)| = {order} does not divide 12 for even m = {m}")
        n = 12 // order
    return Pi2m2(m, group, order, n)


def stiefel_pi(m: int, r: int, index: int) -> PiEntry:
    """``pi_index(W(m, r))`` within the tabulated window."""
    if not 1 <= r <= m:
        raise OutOfTabulatedRange(f"W(m, r) needs 1 <= r <= m, got m={m}, r={r}")
    if index < 0:
        raise OutOfTabulatedRange("negative homotopy index")
    i = index - 2 * (m - r)
    if i <= 0:
        return PiEntry(m, r, index, TRIVIAL, "connectivity")
    if i == 1:
        return PiEntry(m, r, index, Z, "first nonvanishing group")
    odd = m % 2 == 1
    if r == 2 and i in _STIEFEL2:
        if m <= 2:
            raise OutOfTabulatedRange(f"stiefel2 needs m > 2, got m = {m}")
        return PiEntry(m, r, index, _STIEFEL2[i][0 if odd else 1], "stiefel2")
    if r == 3 and 1 <= i <= 5:
        if (odd and m <= 2) or (not odd and m <= 4):
            raise OutOfTabulatedRange(f"stiefel3 needs m > 2 (odd) or m > 4 (even), got m = {m}")
        if i == 4:
            return PiEntry(m, r, index, pi_2m2(m).group, "pi")
        return PiEntry(m, r, index, _STIEFEL3[i][0 if odd else 1], "stiefel3")
    raise OutOfTabulatedRange(f"pi_{index}(W({m},{r})) is not tabulated")


# ---------------------------------------------------------------------------
# Universal-coefficient cross-validation.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UCTCheck:
    table: str
    group: str
    q: int
    shift: int
    coefficients: str
    tabulated: AbelianGroup
    computed: AbelianGroup

    @property
    def ok(self) -> bool:
        return self.tabulated == self.computed


@dataclass(frozen=True)
class UCTReport:
    checks: tuple[UCTCheck, ...] = field(default_factory=tuple)

    @property
    def violations(self) -> list[UCTCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


UCT_SAMPLE_GROUPS = (
    Z,
    cyclic(2), cyclic(3), cyclic(4), cyclic(8), cyclic(6), cyclic(12), cyclic(5),
    AbelianGroup(1, (2,)), AbelianGroup(0, (2, 4)), AbelianGroup(2, (3, 6)),
)


def _uct(h_i: AbelianGroup, h_prev: AbelianGroup, k: int) -> AbelianGroup:
    return hom(h_i, k).direct_sum(ext(h_prev, k))


def _homology_or_none(G, q, i, table):
    if i == q - 1:
        return TRIVIAL  # K(G, q) is (q-1)-connected
    try:
        return em_homology(G, q, i, table=table).value
    except OutOfTabulatedRange:
        return None


def verify_uct(q_range: range = range(1, 15)) -> UCTReport:
    """Recompute every tabulated integral and mod-k cohomology group from tabulated homology."""
    checks: list[UCTCheck] = []

    def run(table, G, q, shift, k, homology_table):
        try:
            entry = em_cohomology(G, q, q + shift, k, table=table)
        except OutOfTabulatedRange:
            return
        h_i = _homology_or_none(G, q, q + shift, homology_table)
        h_prev = _homology_or_none(G, q, q + shift - 1, homology_table)
        if h_i is None or h_prev is None:
            return
        checks.append(UCTCheck(table, str(G), q, shift, entry.coefficients, entry.value, _uct(h_i, h_prev, k)))

    for q in q_range:
        for shift in _EM_Z:
            run("em-z", Z, q, shift, 0, "em-z")
            if shift in _GENERAL_HOMOLOGY:
                run("em-z", Z, q, shift, 0, "em-general")
        for k in MOD_K:
            for shift in _EM_Z_MOD[k]:
                run("em-z-mod", Z, q, shift, k, "em-z")
        for k in ZK:
            for shift in _EM_ZK_COHOMOLOGY:
                run("em-zk", cyclic(k), q, shift, 0, "em-zk")
                run("em-zk", cyclic(k), q, shift, 0, "em-general")
        for G in UCT_SAMPLE_GROUPS:
            for shift in _GENERAL_COHOMOLOGY:
                run("em-general", G, q, shift, 0, "em-general")
    return UCTReport(tuple(checks))


# ---------------------------------------------------------------------------
# Whole-table dumps, column order as printed.
# ---------------------------------------------------------------------------

TABLE_NAMES = ("em-general", "em-z", "em-z-mod", "em-zk", "stiefel2", "stiefel3", "pi")


def table_rows(name: str, m: int | None = None) -> tuple[list[str], list[list[str]]]:
    """Header and rows of a table as strings; ``m`` selects one row of ``pi``."""
    if name == "em-general":
        header = ["i", "H_i(K(G,q);Z)", "H^i(K(G,q);Z)", "q"]
        rows = [
            [f"q+{s}" if s else "q", _GENERAL_HOMOLOGY[s][0], _GENERAL_COHOMOLOGY[s][0],
             f"q>{_GENERAL_MIN_Q[s] - 1}"]
            for s in sorted(_GENERAL_HOMOLOGY)
        ]
        return header, rows
    if name == "em-z":
        header = ["i", "H_i(K(Z,q);Z)", "H^i(K(Z,q);Z)", "generators", "q"]
        rows = [
            [f"q+{s}" if s else "q", str(h), str(c), "; ".join(labels), f"q>={min_q}"]
            for s, (min_q, h, c, labels) in sorted(_EM_Z.items())
        ]
        return header, rows
    if name == "em-z-mod":
        header = ["i"] + [f"k={k}" for k in MOD_K]
        rows = []
        for s in range(6):
            row = [f"q+{s}" if s else "q"]
            for k in MOD_K:
                value, label = _EM_Z_MOD[k][s]
                row.append(f"{value}<{label}>" if label else str(value))
            rows.append(row)
        return header, rows
    if name == "em-zk":
        header = ["kind", "i"] + [f"G=Z/{k}" for k in ZK]
        rows = []
        for s in sorted(_EM_ZK_HOMOLOGY):
            rows.append(["homology", f"q+{s}" if s else "q"] + [str(_EM_ZK_HOMOLOGY[s](k)) for k in ZK])
        for s in sorted(_EM_ZK_COHOMOLOGY):
            cells = []
            for k in ZK:
                value, label = _EM_ZK_COHOMOLOGY[s](k)
                cells.append(f"{value}<{label}>" if label else str(value))
            rows.append(["cohomology", f"q+{s}" if s else "q"] + cells)
        return header, rows
    if name == "stiefel2":
        header = ["i", "m>2 odd", "m>2 even"]
        return header, [[str(i), str(a), str(b)] for i, (a, b) in sorted(_STIEFEL2.items())]
    if name == "stiefel3":
        header = ["i", "m>2 odd", "m>4 even"]
        rows = []
        for i in range(1, 6):
            if i == 4:
                rows.append(["4", "pi_(2m-2)", "pi_(2m-2)"])
            else:
                a, b = _STIEFEL3[i]
                rows.append([str(i), str(a), str(b)])
        return header, rows
    if name == "pi":
        if m is not None:
            entry = pi_2m2(m)
            header = ["m", "m mod 3", "m mod 8", "pi_(2m-2)", "order", "n"]
            return header, [[str(m), str(m % 3), str(m % 8), str(entry.group), str(entry.order),
                             "" if entry.n is None else str(entry.n)]]
        header = ["m mod 3", "m mod 8", "pi_(2m-2)"]
        classes = [("2 or 6", 2), ("1,4 or 5", 1), ("0 or 7", 0), ("3", 3)]
        rows = []
        for divisible in (False, True):
            for label, rep in classes:
                orders = [_PI_2PRIMARY[rep]] + ([3] if divisible else [])
                rows.append(["0" if divisible else "!=0", label, str(AbelianGroup.from_cyclic_orders(orders))])
        return header, rows
    raise KeyError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
