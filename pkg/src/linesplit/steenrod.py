"""Mod-2 Steenrod calculus.

``SqExpr`` is a Z/2-linear combination of composites ``Sq^{a_1} ... Sq^{a_k}``
(a monomial is the tuple ``(a_1, ..., a_k)``; the empty tuple is ``Sq^0``).
``BPolynomial`` is a Z/2-polynomial in ``b_1, b_2, ...`` (``deg b_j = 2j``),
the mod-2 Chern classes of a universal stable bundle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

__all__ = [
    "binom_mod2",
    "SqExpr",
    "adem_relation",
    "adem_reduce",
    "BPolynomial",
    "sq_wu",
    "sq_on_b",
    "sq_stiefel",
    "sq2_cpm",
]


def binom_mod2(n: int, k: int) -> int:
    """``binom(n, k) mod 2`` with ``binom(x, 0) = 1`` for every integer ``x``.

    Negative upper index uses ``binom(n, k) = (-1)^k binom(k - n - 1, k)``.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        n = k - n - 1
    if k > n:
        return 0
    return int(k & ~n == 0)


def _xor_terms(terms: Iterable) -> frozenset:
    out: set = set()
    for t in terms:
        out ^= {t}
    return frozenset(out)


@dataclass(frozen=True)
class SqExpr:
    terms: frozenset = frozenset()

    def __post_init__(self):
        cleaned = _xor_terms(tuple(a for a in mono if a != 0) for mono in self.terms)
        for mono in cleaned:
            if any(a < 0 for a in mono):
                raise ValueError(f"negative square in {mono}")
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def mono(cls, *exponents: int) -> "SqExpr":
        return cls(frozenset([tuple(exponents)]))

    @classmethod
    def parse(cls, text: str) -> "SqExpr":
        """Parse ``"Sq2Sq1Sq2 + Sq5"`` (``"0"`` is the zero element, ``"1"`` is ``Sq^0``)."""
        text = text.replace(" ", "").replace("^", "")
        if text in ("", "0"):
            return cls()
        terms = []
        for chunk in text.split("+"):
            if chunk == "1":
                terms.append(())
                continue
            if not re.fullmatch(r"(Sq\d+)+", chunk):
                raise ValueError(f"cannot parse Steenrod monomial {chunk!r}")
            terms.append(tuple(int(a) for a in re.findall(r"Sq(\d+)", chunk)))
        return cls(_xor_terms(terms))

    def __add__(self, other: "SqExpr") -> "SqExpr":
        return SqExpr(self.terms ^ other.terms)

    def __mul__(self, other: "SqExpr") -> "SqExpr":
        return SqExpr(_xor_terms(a + b for a in self.terms for b in other.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def is_admissible(self) -> bool:
        return all(_admissible(mono) for mono in self.terms)

    def degrees(self) -> set[int]:
        return {sum(mono) for mono in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def fmt(mono):
            return "".join(f"Sq{a}" for a in mono) if mono else "1"
        return " + ".join(fmt(m) for m in sorted(self.terms, key=lambda t: (-sum(t), [-a for a in t])))


def _admissible(mono: tuple) -> bool:
    return all(a >= 2 * b for a, b in zip(mono, mono[1:]))


def adem_relation(a: int, b: int) -> SqExpr:
    """``Sq^a Sq^b = sum_c binom(b-1-c, a-2c) Sq^{a+b-c} Sq^c`` for ``0 < a < 2b``."""
    if not 0 < a < 2 * b:
        raise ValueError(f"Sq{a}Sq{b} is already admissible")
    terms = [
        (a + b - c, c) if c else (a + b,)
        for c in range(a // 2 + 1)
        if binom_mod2(b - 1 - c, a - 2 * c)
    ]
    return SqExpr(_xor_terms(terms))


@lru_cache(maxsize=None)
def _reduce_mono(mono: tuple) -> frozenset:
    for i in range(len(mono) - 1):
        a, b = mono[i], mono[i + 1]
        if a < 2 * b:
            out: set = set()
            for mid in adem_relation(a, b).terms:
                out ^= _reduce_mono(mono[:i] + mid + mono[i + 2:])
            return frozenset(out)
    return frozenset([mono])


def adem_reduce(x: SqExpr) -> SqExpr:
    """Rewrite ``x`` as a sum of admissible monomials."""
    out: set = set()
    for mono in x.terms:
        out ^= _reduce_mono(mono)
    return SqExpr(frozenset(out))


@dataclass(frozen=True)
class BPolynomial:
    """Sum of monomials ``b_{j_1} ... b_{j_k}``; a monomial is a sorted index tuple, ``()`` is 1."""

    terms: frozenset = frozenset()

    def __post_init__(self):
        cleaned = _xor_terms(tuple(sorted(j for j in mono if j != 0)) for mono in self.terms)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def mono(cls, *indices: int) -> "BPolynomial":
        return cls(frozenset([tuple(indices)]))

    @classmethod
    def parse(cls, text: str) -> "BPolynomial":
        """Parse ``"b1b2 + b3"`` or ``"b2^2"``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        terms = []
        for chunk in text.split("+"):
            if chunk == "1":
                terms.append(())
                continue
            if not re.fullmatch(r"(b\d+(\^\d+)?)+", chunk):
                raise ValueError(f"cannot parse monomial {chunk!r}")
            mono: list[int] = []
            for j, e in re.findall(r"b(\d+)(?:\^(\d+))?", chunk):
                mono.extend([int(j)] * int(e or 1))
            terms.append(tuple(mono))
        return cls(_xor_terms(terms))

    def __add__(self, other: "BPolynomial") -> "BPolynomial":
        return BPolynomial(self.terms ^ other.terms)

    def __mul__(self, other: "BPolynomial") -> "BPolynomial":
        return BPolynomial(_xor_terms(a + b for a in self.terms for b in other.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def fmt(mono):
            if not mono:
                return "1"
            out = []
            for j in sorted(set(mono)):
                e = mono.count(j)
                out.append(f"b{j}" if e == 1 else f"b{j}^{e}")
            return "".join(out)
        return " + ".join(fmt(m) for m in sorted(self.terms))


def sq_wu(i: int, j: int) -> BPolynomial:
    """``Sq^{2i}(b_j) = sum_{t=0}^{i} binom(j+t-i-1, t) b_{i-t} b_{j+t}`` for ``1 <= i <= j``."""
    if i < 1 or j < 1:
        raise ValueError("indices must be positive")
    if i > j:
        raise ValueError(f"Wu formula needs i <= j, got i={i}, j={j}")
    terms = [(i - t, j + t) for t in range(i + 1) if binom_mod2(j + t - i - 1, t)]
    return BPolynomial(_xor_terms(terms))


def sq_on_b(k: int, j: int) -> BPolynomial:
    """``Sq^k(b_j)`` for any ``k >= 0``: odd squares vanish, ``Sq^{2i} b_j = 0`` for ``i > j``."""
    if k < 0 or j < 1:
        raise ValueError("need k >= 0 and j >= 1")
    if k == 0:
        return BPolynomial.mono(j)
    if k % 2 or k // 2 > j:
        return BPolynomial()
    return sq_wu(k // 2, j)


def sq_stiefel(j: int, i: int, m: int) -> int:
    """Coefficient of ``f_{2i+2j+1}`` in ``Sq^{2j} f_{2i+1}`` in ``H^*(W(m, r); Z/2)``."""
    if j < 0 or i < 0:
        raise ValueError("indices must be nonnegative")
    if i > m - 1:
        return 0
    if j == 0:
        return 1
    if j <= i and i + j <= m - 1:
        return binom_mod2(i, j)
    return 0


def sq2_cpm(k: int, m: int) -> int:
    """Coefficient of ``u^{k+1}`` in ``Sq^2(u^k)`` over ``H^*(CP^m; Z/2)``."""
    if not 0 <= k <= m:
        raise ValueError(f"u^{k} does not exist in CP^{m}")
    if k + 1 > m:
        return 0
    return k % 2
