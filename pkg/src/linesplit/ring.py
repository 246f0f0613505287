"""Even-degree cohomology rings: ``R[u]/(u^{m+1})`` and structure-constant rings.

``TruncatedPoly`` is the workhorse for classes over ``CP^m``.  ``RingProfile``
describes ``H^{even}(X; Z)`` of a general base by generators of each group
``H^{2i}`` and bilinear structure constants; its elements are coordinate
vectors in the sense of :mod:`linesplit.algebra`.  Index ``i`` always means
complex degree, i.e. the group ``H^{2i}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .algebra import AbelianGroup, Z, reduce_element

__all__ = [
    "TruncatedPoly",
    "RingProfile",
    "cpm_ring",
    "poly_mul",
    "unit_inverse",
    "reduce_mod_p",
]

Modulus = Union[str, int]  # "Z", "Q" or a modulus p >= 2


def _normalize_coeff(x, modulus: Modulus):
    if modulus == "Z":
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral coefficient {x} over Z")
            return int(x)
        if isinstance(x, bool) or int(x) != x:
            raise ValueError(f"non-integral coefficient {x!r} over Z")
        return int(x)
    if modulus == "Q":
        return Fraction(x)
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"cannot reduce {x} modulo {modulus}")
        x = x.numerator
    return int(x) % modulus


@dataclass(frozen=True)
class TruncatedPoly:
    """``a_0 + a_1 u + ... + a_m u^m`` in ``R[u]/(u^{m+1})``."""

    coeffs: tuple
    modulus: Modulus = "Z"

    def __post_init__(self):
        mod = self.modulus
        if not (mod in ("Z", "Q") or (isinstance(mod, int) and mod >= 2)):
            raise ValueError(f"unsupported coefficient ring {mod!r}")
        if len(self.coeffs) < 1:
            raise ValueError("a truncated polynomial needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(_normalize_coeff(c, mod) for c in self.coeffs))

    @classmethod
    def from_chern(cls, chern: Sequence, m: int | None = None, modulus: Modulus = "Z") -> "TruncatedPoly":
        """``1 + c_1 u + ... `` from ``[c_1, ..., c_k]``, padded with zeros to degree ``m``."""
        m = len(chern) if m is None else m
        if len(chern) > m:
            raise ValueError(f"{len(chern)} Chern classes do not fit in degree {m}")
        return cls((1, *chern) + (0,) * (m - len(chern)), modulus)

    @classmethod
    def one(cls, m: int, modulus: Modulus = "Z") -> "TruncatedPoly":
        return cls((1,) + (0,) * m, modulus)

    @classmethod
    def linear(cls, z, m: int, modulus: Modulus = "Z") -> "TruncatedPoly":
        """``1 + z u``, the total Chern class of a line bundle over ``CP^m``."""
        return cls((1, z) + (0,) * (m - 1), modulus) if m >= 1 else cls((1,), modulus)

    @property
    def top_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedPoly"):
        if not isinstance(other, TruncatedPoly):
            raise TypeError(f"expected TruncatedPoly, got {type(other).__name__}")
        if other.modulus != self.modulus or other.top_degree != self.top_degree:
            raise ValueError(
                f"mismatched rings: ({self.modulus}, m={self.top_degree}) vs "
                f"({other.modulus}, m={other.top_degree})"
            )

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        return TruncatedPoly(tuple(a + b for a, b in zip(self, other)), self.modulus)

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        return TruncatedPoly(tuple(a - b for a, b in zip(self, other)), self.modulus)

    def __neg__(self) -> "TruncatedPoly":
        return TruncatedPoly(tuple(-a for a in self), self.modulus)

    def __mul__(self, other) -> "TruncatedPoly":
        if not isinstance(other, TruncatedPoly):
            return TruncatedPoly(tuple(a * other for a in self), self.modulus)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedPoly":
        if k < 0:
            return unit_inverse(self) ** (-k)
        out = TruncatedPoly.one(self.top_degree, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "TruncatedPoly":
        return unit_inverse(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def degree(self) -> int:
        """Largest ``i`` with ``a_i != 0`` (``-1`` for zero)."""
        return max((i for i, a in enumerate(self.coeffs) if a), default=-1)

    def truncate(self, m: int) -> "TruncatedPoly":
        coeffs = self.coeffs[: m + 1] + (0,) * (m + 1 - len(self.coeffs))
        return TruncatedPoly(coeffs, self.modulus)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            coef = str(a)
            terms.append(coef if not mono else (mono if a == 1 else f"{coef}{mono}"))
        return " + ".join(terms) if terms else "0"


def poly_mul(f: TruncatedPoly, g: TruncatedPoly) -> TruncatedPoly:
    """Cauchy product truncated at ``u^m``."""
    f._check(g)
    m = f.top_degree
    out = [0] * (m + 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j in range(m + 1 - i):
            out[i + j] += a * g.coeffs[j]
    return TruncatedPoly(tuple(out), f.modulus)


def _constant_inverse(a, modulus: Modulus):
    if modulus == "Z":
        if a not in (1, -1):
            raise ValueError(f"constant term {a} is not a unit in Z")
        return a
    if modulus == "Q":
        if a == 0:
            raise ValueError("constant term 0 is not a unit in Q")
        return 1 / Fraction(a)
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise ValueError(f"constant term {a} is not a unit modulo {modulus}") from None


def unit_inverse(f: TruncatedPoly) -> TruncatedPoly:
    """Inverse of a unit, solving ``f * g = 1`` degree by degree."""
    inv0 = _constant_inverse(f.coeffs[0], f.modulus)
    g = [inv0]
    for n in range(1, f.top_degree + 1):
        acc = sum(f.coeffs[k] * g[n - k] for k in range(1, n + 1))
        g.append(-inv0 * acc)
    return TruncatedPoly(tuple(g), f.modulus)


def reduce_mod_p(f: TruncatedPoly, p: int) -> TruncatedPoly:
    """Coefficientwise reduction ``Z -> Z/p``."""
    if f.modulus != "Z":
        raise ValueError("reduction mod p expects integral coefficients")
    if p < 2:
        raise ValueError("p must be at least 2")
    return TruncatedPoly(f.coeffs, p)


Vector = tuple  # coordinate vector of an element of some H^{2i}


@dataclass(frozen=True)
class RingProfile:
    """Even-degree integral cohomology ``H^0, H^2, ..., H^{2m}`` with cup products.

    ``groups[i]`` is ``H^{2i}(X; Z)`` in invariant-factor form; ``groups[0]``
    must be ``Z`` (connected base).  ``products[(a, b)]`` for ``1 <= a <= b``
    and ``a + b <= m`` is a nested list ``C[s][t]`` giving the coordinate
    vector of ``g_s * g_t`` in ``H^{2(a+b)}``; any pair whose target group is
    trivial may be omitted.  Products above degree ``2m`` vanish.
    """

    m: int
    groups: tuple[AbelianGroup, ...]
    products: Mapping[tuple[int, int], tuple] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("top complex degree m must be positive")
        groups = tuple(self.groups)
        if len(groups) != self.m + 1:
            raise ValueError(f"need groups H^0..H^{2 * self.m}, got {len(groups)}")
        if groups[0] != Z:
            raise ValueError("H^0 must be Z")
        object.__setattr__(self, "groups", groups)
        table = {}
        for key, consts in dict(self.products).items():
            a, b = key
            if not (1 <= a <= b and a + b <= self.m):
                raise ValueError(f"product key {key} outside 1 <= a <= b, a + b <= m")
            ga, gb, gc = groups[a], groups[b], groups[a + b]
            rows = [[tuple(v) for v in row] for row in consts]
            if len(rows) != ga.ngens or any(len(r) != gb.ngens for r in rows):
                raise ValueError(f"structure constants {key} have the wrong shape")
            rows = [[reduce_element(gc, v) for v in row] for row in rows]
            if a == b and any(rows[s][t] != rows[t][s] for s in range(ga.ngens) for t in range(ga.ngens)):
                raise ValueError(f"squares in degree {2 * a} are not commutative")
            table[(a, b)] = tuple(tuple(r) for r in rows)
        for a in range(1, self.m + 1):
            for b in range(a, self.m + 1 - a):
                if (a, b) in table:
                    continue
                if groups[a].ngens and groups[b].ngens and groups[a + b].ngens:
                    raise ValueError(f"missing structure constants for H^{2 * a} x H^{2 * b}")
                table[(a, b)] = tuple(
                    tuple((0,) * groups[a + b].ngens for _ in range(groups[b].ngens))
                    for _ in range(groups[a].ngens)
                )
        object.__setattr__(self, "products", table)

    # -- homogeneous elements -------------------------------------------------

    def zero(self, i: int) -> Vector:
        return (0,) * self.groups[i].ngens

    def normalize(self, i: int, vec: Sequence[int]) -> Vector:
        return reduce_element(self.groups[i], vec)

    def add(self, i: int, x: Vector, y: Vector) -> Vector:
        return self.normalize(i, [a + b for a, b in zip(x, y)])

    def scale(self, i: int, k: int, x: Vector) -> Vector:
        return self.normalize(i, [k * a for a in x])

    def is_zero(self, x: Vector) -> bool:
        return not any(x)

    def mul(self, a: int, x: Vector, b: int, y: Vector) -> Vector | None:
        """Product of ``x`` in ``H^{2a}`` and ``y`` in ``H^{2b}``; ``None`` above ``2m``."""
        if a + b > self.m:
            return None
        if a == 0:
            return self.scale(b, x[0], y)
        if b == 0:
            return self.scale(a, y[0], x)
        if a > b:
            a, b, x, y = b, a, y, x
        consts = self.products[(a, b)]
        out = [0] * self.groups[a + b].ngens
        for s, xs in enumerate(x):
            if not xs:
                continue
            for t, yt in enumerate(y):
                if not yt:
                    continue
                for k, c in enumerate(consts[s][t]):
                    out[k] += xs * yt * c
        return self.normalize(a + b, out)

    # -- total (inhomogeneous) classes ---------------------------------------

    def one(self) -> tuple[Vector, ...]:
        return ((1,),) + tuple(self.zero(i) for i in range(1, self.m + 1))

    def total(self, components: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
        """Normalize a list of components ``x_0, ..., x_k`` (padded to degree ``m``)."""
        comps = list(components)
        if len(comps) > self.m + 1:
            raise ValueError(f"{len(comps)} components exceed degree {self.m}")
        comps += [self.zero(i) for i in range(len(comps), self.m + 1)]
        return tuple(self.normalize(i, v) for i, v in enumerate(comps))

    def total_mul(self, X: Sequence[Vector], Y: Sequence[Vector]) -> tuple[Vector, ...]:
        out = [self.zero(i) for i in range(self.m + 1)]
        for a in range(self.m + 1):
            if self.is_zero(X[a]):
                continue
            for b in range(self.m + 1 - a):
                prod = self.mul(a, X[a], b, Y[b])
                out[a + b] = self.add(a + b, out[a + b], prod)
        return tuple(out)

    def total_inverse(self, X: Sequence[Vector]) -> tuple[Vector, ...]:
        """Inverse of a total class with constant term ``+-1``: geometric series in the nilpotent part."""
        x0 = X[0][0]
        if x0 not in (1, -1):
            raise ValueError(f"constant term {x0} is not a unit")
        # X = x0 (1 + N); X^{-1} = x0 * sum_j (-N)^j
        neg_nil = (self.zero(0),) + tuple(self.scale(i, -x0, X[i]) for i in range(1, self.m + 1))
        result = self.one()
        power = self.one()
        for _ in range(self.m):
            power = self.total_mul(power, neg_nil)
            result = tuple(self.add(i, r, p) for i, (r, p) in enumerate(zip(result, power)))
        return tuple(self.scale(i, x0, v) for i, v in enumerate(result))

    def to_poly(self, X: Sequence[Vector]) -> TruncatedPoly:
        """View a total class of a rank-one-per-degree free ring as a polynomial."""
        if any(g != Z for g in self.groups):
            raise ValueError("only rings with H^{2i} = Z in every degree convert to polynomials")
        return TruncatedPoly(tuple(v[0] for v in X), "Z")

    def from_poly(self, f: TruncatedPoly) -> tuple[Vector, ...]:
        if any(g != Z for g in self.groups):
            raise ValueError("only rings with H^{2i} = Z in every degree convert from polynomials")
        if f.top_degree != self.m:
            raise ValueError(f"polynomial of degree {f.top_degree} in a ring of degree {self.m}")
        return tuple((c,) for c in f.coeffs)

    def is_associative(self) -> bool:
        """Check ``(g h) k = g (h k)`` on all triples of generators."""
        def basis(i):
            n = self.groups[i].ngens
            return [tuple(int(s == t) for t in range(n)) for s in range(n)]

        for a in range(1, self.m + 1):
            for b in range(1, self.m + 1 - a):
                for c in range(1, self.m + 1 - a - b):
                    for x in basis(a):
                        for y in basis(b):
                            for z in basis(c):
                                left = self.mul(a + b, self.mul(a, x, b, y), c, z)
                                right = self.mul(a, x, b + c, self.mul(b, y, c, z))
                                if left != right:
                                    return False
        return True


def cpm_ring(m: int) -> RingProfile:
    """``H^*(CP^m; Z) = Z[u]/(u^{m+1})`` with generator ``u^i`` in each ``H^{2i}``."""
    if m < 1:
        raise ValueError("CP^m needs m >= 1")
    products = {(a, b): (((1,),),) for a in range(1, m + 1) for b in range(a, m + 1 - a)}
    return RingProfile(m, (Z,) * (m + 1), products)
