"""Finitely generated abelian groups from integer matrix presentations.

Groups are kept in invariant-factor form ``Z^f + Z/d1 + ... + Z/dk`` with
``d1 | d2 | ... | dk``.  Elements of such a group are coordinate vectors:
the first ``f`` coordinates are free, the remaining ones are read modulo the
corresponding invariant factor.  Every map between groups in this package is
an integer matrix acting on those coordinates (columns are images of the
source generators).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "AbelianGroup",
    "smith_normal_form",
    "cokernel_group",
    "has_n_torsion",
    "hom_and_ext",
    "hom",
    "ext",
    "quotient_by_multiples",
    "n_torsion_subgroup",
    "is_surjective",
    "is_well_defined",
    "reduce_element",
    "Z",
    "TRIVIAL",
    "cyclic",
]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            out[i][i] = v
        return cls.from_rows(out, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, other.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for matrix with {self.cols} columns")
        return tuple(
            sum(self.entries[i * self.cols + k] * vec[k] for k in range(self.cols))
            for i in range(self.rows)
        )

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _as_matrix(A) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix.from_rows(A)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``x a + y b = g = gcd(a, b) > 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(A) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``D = U A V`` diagonal, ``d1 | d2 | ...``, ``d_i >= 0``.

    ``U`` and ``V`` are unimodular.  Plain row/column gcd elimination over the
    integers; no modular tricks.
    """
    A = _as_matrix(A)
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def mix_rows(i, j, a, b, c, d):  # (row i, row j) <- (a ri + b rj, c ri + d rj)
        for M in (D, U):
            ri, rj = M[i], M[j]
            M[i] = [a * x + b * y for x, y in zip(ri, rj)]
            M[j] = [c * x + d * y for x, y in zip(ri, rj)]

    def mix_cols(i, j, a, b, c, d):  # (col i, col j) <- (a ci + b cj, c ci + d cj)
        for M in (D, V):
            for row in M:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + b * y, c * x + d * y

    for t in range(min(m, n)):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # each 2x2 step has determinant 1 and replaces the pivot by a gcd
            for i in range(t + 1, m):
                if D[i][t]:
                    a, b = D[t][t], D[i][t]
                    if b % a == 0:
                        add_row(t, i, -(b // a))
                        continue
                    g, x, y = _xgcd(a, b)
                    mix_rows(t, i, x, y, -b // g, a // g)
            for j in range(t + 1, n):
                if D[t][j]:
                    a, b = D[t][t], D[t][j]
                    if b % a == 0:
                        mix_cols(t, j, 1, 0, -(b // a), 1)
                        continue
                    g, x, y = _xgcd(a, b)
                    mix_cols(t, j, x, y, -b // g, a // g)
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return IntMatrix.from_rows(D, n), IntMatrix.from_rows(U, m), IntMatrix.from_rows(V, n)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic factors ``Z/d`` in divisibility order."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be >= 2, got {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {factors}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Direct sum of ``Z/n`` for each ``n`` (``0`` means ``Z``, ``1`` the trivial group)."""
        orders = list(orders)
        if any(n < 0 for n in orders):
            raise ValueError("cyclic orders must be nonnegative")
        return cokernel_group(IntMatrix.diag(orders))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Per-coordinate modulus, ``0`` for free coordinates."""
        return (0,) * self.free_rank + self.invariant_factors

    @property
    def order(self) -> int | None:
        """Number of elements, or ``None`` when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_torsion_free(self) -> bool:
        return not self.invariant_factors

    def torsion(self) -> "AbelianGroup":
        return AbelianGroup(0, self.invariant_factors)

    def direct_sum(self, *others: "AbelianGroup") -> "AbelianGroup":
        orders = list(self.moduli)
        for g in others:
            orders.extend(g.moduli)
        return AbelianGroup.from_cyclic_orders(orders)

    def elements(self):
        """Enumerate a finite group as coordinate tuples."""
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        out = [()]
        for d in self.invariant_factors:
            out = [v + (x,) for v in out for x in range(d)]
        return out

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


Z = AbelianGroup(1)
TRIVIAL = AbelianGroup()


def cyclic(n: int) -> AbelianGroup:
    """``Z/n``; ``cyclic(0)`` is ``Z``."""
    return AbelianGroup.from_cyclic_orders([n])


def cokernel_group(A) -> AbelianGroup:
    """Group generated by the rows of ``A`` subject to its columns as relations."""
    A = _as_matrix(A)
    D, _, _ = smith_normal_form(A)
    diag = D.diagonal()
    nonzero = [d for d in diag if d]
    return AbelianGroup(A.rows - len(nonzero), tuple(d for d in nonzero if d > 1))


def has_n_torsion(G: AbelianGroup, n: int) -> bool:
    """Whether some nonzero element of ``G`` is killed by ``n``."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return any(gcd(n, d) > 1 for d in G.invariant_factors)


def hom(G: AbelianGroup, k: int = 0) -> AbelianGroup:
    """``Hom(G, Z/k)``; ``k = 0`` means ``Hom(G, Z)``."""
    if k == 0:
        return AbelianGroup(G.free_rank)
    return AbelianGroup.from_cyclic_orders([k] * G.free_rank + [gcd(d, k) for d in G.invariant_factors])


def ext(G: AbelianGroup, k: int = 0) -> AbelianGroup:
    """``Ext^1(G, Z/k)``; ``k = 0`` means ``Ext^1(G, Z)``."""
    if k == 0:
        return G.torsion()
    return AbelianGroup.from_cyclic_orders([gcd(d, k) for d in G.invariant_factors])


def hom_and_ext(G: AbelianGroup) -> tuple[AbelianGroup, AbelianGroup]:
    return hom(G), ext(G)


def quotient_by_multiples(G: AbelianGroup, n: int) -> AbelianGroup:
    """``G / nG``."""
    return AbelianGroup.from_cyclic_orders([n] * G.free_rank + [gcd(d, n) for d in G.invariant_factors])


def n_torsion_subgroup(G: AbelianGroup, n: int) -> AbelianGroup:
    """``{g in G : n g = 0}``."""
    return AbelianGroup.from_cyclic_orders([gcd(d, n) for d in G.invariant_factors])


def reduce_element(G: AbelianGroup, vec: Sequence[int]) -> tuple[int, ...]:
    if len(vec) != G.ngens:
        raise ValueError(f"element {tuple(vec)} has wrong length for {G}")
    return tuple(x % d if d else int(x) for x, d in zip(vec, G.moduli))


def _relation_columns(G: AbelianGroup) -> list[list[int]]:
    cols = []
    for idx, d in enumerate(G.moduli):
        if d:
            col = [0] * G.ngens
            col[idx] = d
            cols.append(col)
    return cols


def is_surjective(M: IntMatrix, target: AbelianGroup) -> bool:
    """Whether the columns of ``M`` generate ``target``."""
    if M.rows != target.ngens:
        raise ValueError(f"matrix has {M.rows} rows but {target} has {target.ngens} generators")
    if target.is_trivial():
        return True
    cols = [list(c) for c in zip(*M.to_rows())] if M.cols else []
    cols += _relation_columns(target)
    if not cols:
        return False
    presentation = IntMatrix.from_rows([list(r) for r in zip(*cols)], len(cols))
    return cokernel_group(presentation).is_trivial()


def is_well_defined(M: IntMatrix, source: AbelianGroup, target: AbelianGroup) -> bool:
    """Whether ``M`` sends every relation of ``source`` to a relation of ``target``."""
    if M.shape != (target.ngens, source.ngens):
        return False
    for j, d in enumerate(source.moduli):
        if not d:
            continue
        image = [M[i, j] * d for i in range(M.rows)]
        if reduce_element(target, image) != (0,) * target.ngens:
            return False
    return True
