"""Total and virtual Chern classes.

For a rank-``m`` bundle ``xi`` and line bundles ``l_1, ..., l_r`` the stable
class ``xi - l_1 - ... - l_r`` has

    c_n = sum_j c_{n-j}(xi) h_j(-c_1(l_1), ..., -c_1(l_r)),

with ``h_j`` the complete homogeneous symmetric polynomial.  The splitting
question only ever looks at whether the top ``r`` of these vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ring import RingProfile, TruncatedPoly, cpm_ring

__all__ = [
    "ChernVector",
    "LineBundle",
    "whitney_sum",
    "virtual_total",
    "virtual_chern",
    "virtual_chern_oracle",
    "top_vanishing",
]


@dataclass(frozen=True, eq=False)
class ChernVector:
    """Total Chern class ``1 + c_1 + ... + c_m`` of a rank-``rank`` bundle.

    ``components`` runs over every degree of the ring, ``0..ring.m``; entries
    above ``rank`` must vanish.
    """

    ring: RingProfile
    rank: int
    components: tuple

    def __post_init__(self):
        comps = self.ring.total(self.components)
        if comps[0] != (1,):
            raise ValueError("c_0 must be 1")
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(not self.ring.is_zero(c) for c in comps[self.rank + 1:]):
            raise ValueError(f"a rank-{self.rank} bundle has no Chern classes above c_{self.rank}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_classes(cls, ring: RingProfile, classes: Sequence[Sequence[int]], rank: int | None = None) -> "ChernVector":
        """Build from ``[c_1, ..., c_k]`` (coordinate vectors); rank defaults to the ring's ``m``."""
        rank = ring.m if rank is None else rank
        return cls(ring, rank, ((1,), *classes))

    @classmethod
    def cpm(cls, m: int, chern: Sequence[int], rank: int | None = None) -> "ChernVector":
        """Bundle over ``CP^m`` with ``c_i = chern[i-1] u^i``."""
        return cls.from_classes(cpm_ring(m), [(c,) for c in chern], rank)

    @classmethod
    def trivial(cls, ring: RingProfile, rank: int | None = None) -> "ChernVector":
        return cls(ring, ring.m if rank is None else rank, ring.one())

    def __getitem__(self, i: int):
        return self.components[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChernVector)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.components == other.components
        )

    def as_poly(self) -> TruncatedPoly:
        return self.ring.to_poly(self.components)


@dataclass(frozen=True, eq=False)
class LineBundle:
    ring: RingProfile
    c1: tuple

    def __post_init__(self):
        object.__setattr__(self, "c1", self.ring.normalize(1, self.c1))

    @classmethod
    def cpm(cls, m: int, z: int) -> "LineBundle":
        return cls(cpm_ring(m), (z,))

    def chern(self) -> ChernVector:
        return ChernVector.from_classes(self.ring, [self.c1], rank=1)

    def __eq__(self, other) -> bool:
        return isinstance(other, LineBundle) and self.ring == other.ring and self.c1 == other.c1


def _check_ring(xi: ChernVector, lines: Sequence[LineBundle]):
    for line in lines:
        if line.ring != xi.ring:
            raise ValueError("line bundle lives over a different ring profile")


def whitney_sum(xi: ChernVector, eta: ChernVector) -> ChernVector:
    """``c(xi + eta) = c(xi) c(eta)``, truncated at the ring's top degree."""
    if xi.ring != eta.ring:
        raise ValueError("ring profile mismatch")
    ring = xi.ring
    return ChernVector(ring, min(xi.rank + eta.rank, ring.m), ring.total_mul(xi.components, eta.components))


def _complete_homogeneous(ring: RingProfile, xs: Sequence[tuple]) -> list[tuple]:
    """``h_0, ..., h_m`` of the degree-2 classes ``xs``, via h_j = sum_k (-1)^(k+1) e_k h_(j-k)."""
    m = ring.m
    elem = [ring.zero(i) for i in range(m + 1)]
    elem[0] = (1,)
    for x in xs:
        for k in range(min(len(xs), m), 0, -1):
            elem[k] = ring.add(k, elem[k], ring.mul(1, x, k - 1, elem[k - 1]))
    h = [(1,)]
    for j in range(1, m + 1):
        acc = ring.zero(j)
        for k in range(1, min(j, len(xs)) + 1):
            term = ring.mul(k, elem[k], j - k, h[j - k])
            acc = ring.add(j, acc, term if k % 2 else ring.scale(j, -1, term))
        h.append(acc)
    return h


def virtual_total(xi: ChernVector, lines: Sequence[LineBundle]) -> tuple:
    """All components ``c_0..c_m`` of ``xi - l_1 - ... - l_r``."""
    _check_ring(xi, lines)
    ring = xi.ring
    h = _complete_homogeneous(ring, [ring.scale(1, -1, line.c1) for line in lines])
    out = []
    for n in range(ring.m + 1):
        acc = ring.zero(n)
        for j in range(n + 1):
            acc = ring.add(n, acc, ring.mul(n - j, xi[n - j], j, h[j]))
        out.append(acc)
    return tuple(out)


def virtual_chern(xi: ChernVector, lines: Sequence[LineBundle], n: int) -> tuple:
    """``c_n(xi - l_1 - ... - l_r)`` as a coordinate vector in ``H^{2n}``."""
    if not 0 <= n <= xi.ring.m:
        raise ValueError(f"degree {n} outside 0..{xi.ring.m}")
    if len(lines) > xi.ring.m:
        raise ValueError("more line bundles than the top degree")
    return virtual_total(xi, lines)[n]


def virtual_chern_oracle(xi: ChernVector, lines: Sequence[LineBundle], n: int) -> tuple:
    """Same class as :func:`virtual_chern`, as ``c(xi) * prod c(l_i)^{-1}``."""
    if not 0 <= n <= xi.ring.m:
        raise ValueError(f"degree {n} outside 0..{xi.ring.m}")
    _check_ring(xi, lines)
    ring = xi.ring
    total = xi.components
    for line in lines:
        total = ring.total_mul(total, ring.total_inverse(line.chern().components))
    return total[n]


def top_vanishing(xi: ChernVector, lines: Sequence[LineBundle], r: int | None = None) -> tuple[bool, int | None]:
    """Whether ``c_{m+1-i}(xi - l_1 - ... - l_r) = 0`` for ``i = 1..r``.

    Returns ``(True, None)`` or ``(False, i)`` with the smallest failing ``i``
    (so ``i = 1`` is the top class ``c_m``).  ``m`` is the rank of ``xi``.
    """
    r = len(lines) if r is None else r
    m = xi.rank
    virtual = virtual_total(xi, lines)
    for i in range(1, r + 1):
        n = m + 1 - i
        if n <= xi.ring.m and not xi.ring.is_zero(virtual[n]):
            return False, i
    return True, None
