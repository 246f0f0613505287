"""Exact symmetric functions of the implicit roots of a total Chern class.

A class ``1 + e_1 u + ... + e_N u^N`` over ``CP^m`` factors over ``C`` as
``prod (1 + z_i u)``.  Nothing here ever computes the ``z_i``: power sums come
from Newton's identities and ``sum_i binom(z_i, k)`` from Stirling numbers of
the first kind, all in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .ring import TruncatedPoly, unit_inverse

__all__ = [
    "ElemSymVector",
    "power_sums",
    "stirling_first",
    "binom_sum",
    "SchwarzenbergerResult",
    "schwarzenberger_check",
    "SplitAdmissibility",
    "cpm_split_admissible",
]

ElemSymVector = tuple  # (e_1, ..., e_N) as Fractions


def _as_elem(e: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in e)


def power_sums(e: Sequence, K: int) -> list[Fraction]:
    """``p_1, ..., p_K`` with ``p_k = sum_i z_i^k``."""
    if K < 1:
        raise ValueError("K must be at least 1")
    e = _as_elem(e)
    N = len(e)
    p: list[Fraction] = []
    for k in range(1, K + 1):
        acc = Fraction(0)
        for j in range(1, min(k - 1, N) + 1):
            acc += (-1) ** (j - 1) * e[j - 1] * p[k - j - 1]
        if k <= N:
            acc += (-1) ** (k - 1) * k * e[k - 1]
        p.append(acc)
    return p


@lru_cache(maxsize=None)
def stirling_first(k: int) -> tuple[int, ...]:
    """Signed Stirling numbers ``s(k, 0..k)``: ``x(x-1)...(x-k+1) = sum_j s(k, j) x^j``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return (1,)
    prev = stirling_first(k - 1)
    row = [0] * (k + 1)
    for j in range(1, k + 1):
        row[j] = (prev[j - 1] if j - 1 < len(prev) else 0) - (k - 1) * (prev[j] if j < len(prev) else 0)
    return tuple(row)


def binom_sum(e: Sequence, k: int) -> Fraction:
    """``sum_i binom(z_i, k)`` for the roots encoded by ``e``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    p = power_sums(e, k)
    s = stirling_first(k)
    return sum((s[j] * p[j - 1] for j in range(1, k + 1)), Fraction(0)) / factorial(k)


@dataclass(frozen=True)
class SchwarzenbergerResult:
    realizable: bool
    failing_k: int | None = None
    value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.realizable


def _coefficients(c, m: int | None) -> tuple[list, int]:
    if isinstance(c, TruncatedPoly):
        coeffs = list(c.coeffs)
        m = c.top_degree if m is None else m
    else:
        coeffs = list(c)
        m = len(coeffs) - 1 if m is None else m
    if not coeffs or coeffs[0] != 1:
        raise ValueError("total Chern class must have constant term 1")
    if any(Fraction(x).denominator != 1 for x in coeffs):
        raise ValueError("total Chern class must have integer coefficients")
    if any(coeffs[m + 1:]):
        raise ValueError(f"class has terms above degree {m}")
    coeffs = coeffs[: m + 1] + [0] * (m + 1 - len(coeffs))
    return coeffs, m


def schwarzenberger_check(c, m: int | None = None) -> SchwarzenbergerResult:
    """Whether ``c = 1 + c_1 u + ... + c_m u^m`` is a total Chern class over ``CP^m``.

    ``c`` may be a :class:`TruncatedPoly` or a coefficient list starting with 1.
    """
    coeffs, m = _coefficients(c, m)
    e = coeffs[1:]
    for k in range(2, m + 1):
        value = binom_sum(e, k)
        if value.denominator != 1:
            return SchwarzenbergerResult(False, k, value)
    return SchwarzenbergerResult(True)


@dataclass(frozen=True)
class SplitAdmissibility:
    """Outcome of the ``CP^m`` splitting test.

    ``status`` is ``"admissible"``, ``"inadmissible"`` or ``"hypothesis_failure"``.
    ``quotient`` holds ``e_1..e_{m-r}`` of the residual roots when division
    succeeded; ``failing_degree`` is set when the quotient does not stop at
    degree ``m - r``, ``failing_k``/``value`` when a binomial sum is not integral.
    """

    status: str
    m: int
    lines: tuple[int, ...]
    quotient: tuple[Fraction, ...] | None = None
    failing_degree: int | None = None
    failing_k: int | None = None
    value: Fraction | None = None
    reason: str = ""

    @property
    def admissible(self) -> bool:
        return self.status == "admissible"


def cpm_split_admissible(c, lines: Sequence[int], m: int | None = None) -> SplitAdmissibility:
    """Decide whether ``c`` is ``c(xi)`` for some ``xi`` over ``CP^m`` containing ``l_1 + ... + l_r``.

    ``lines`` are the integers ``z_i`` with ``c(l_i) = 1 + z_i u``.  The
    quotient ``c / prod(1 + z_i u)`` is formed in ``Q[u]/(u^{m+1})``; it must
    stop at degree ``m - r`` (a necessary condition for any ``m``), after
    which the range ``m > 2r - 1`` of the criterion is required before the residual
    binomial sums are tested for ``k = 2..m``.
    """
    coeffs, m = _coefficients(c, m)
    lines = tuple(int(z) for z in lines)
    r = len(lines)
    if r > 3:
        raise ValueError("at most three line bundles are supported")
    quotient = TruncatedPoly(tuple(coeffs), "Q")
    for z in lines:
        quotient = quotient * unit_inverse(TruncatedPoly.linear(z, m, "Q"))
    for n in range(m - r + 1, m + 1):
        if quotient[n]:
            return SplitAdmissibility(
                "inadmissible", m, lines, failing_degree=n,
                reason=f"quotient has nonzero u^{n} coefficient {quotient[n]}",
            )
    residual = tuple(quotient.coeffs[1: m - r + 1])
    if m <= 2 * r - 1:
        return SplitAdmissibility(
            "hypothesis_failure", m, lines, quotient=residual,
            reason=f"needs m > 2r - 1 = {2 * r - 1}",
        )
    for k in range(2, m + 1):
        value = binom_sum(residual, k)
        if value.denominator != 1:
            return SplitAdmissibility(
                "inadmissible", m, lines, quotient=residual, failing_k=k, value=value,
                reason=f"residual binomial sum for k={k} is {value}",
            )
    return SplitAdmissibility("admissible", m, lines, quotient=residual)
