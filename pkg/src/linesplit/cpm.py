"""Utilities specific to ``CP^m``: exact division by line factors and bounded enumeration."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .ring import TruncatedPoly, unit_inverse
from .symfun import cpm_split_admissible, schwarzenberger_check

__all__ = ["DivisionCertificate", "divide_out_lines", "EnumeratedSplit", "enumerate_split_chern"]


def _line_product(lines: Sequence[int], m: int) -> TruncatedPoly:
    out = TruncatedPoly.one(m)
    for z in lines:
        out = out * TruncatedPoly.linear(z, m)
    return out


@dataclass(frozen=True)
class DivisionCertificate:
    """``c / prod(1 + z_i u)`` in ``Z[u]/(u^{m+1})``.

    ``full`` is the whole truncated quotient; ``quotient`` its coefficients
    ``e_1..e_{m-r}``, the elementary symmetric values of the residual roots.
    """

    m: int
    lines: tuple[int, ...]
    full: TruncatedPoly
    degree_bound_ok: bool
    failing_degree: int | None = None

    @property
    def quotient(self) -> tuple[int, ...]:
        return tuple(self.full.coeffs[1: self.m - len(self.lines) + 1])

    def verify(self, c: TruncatedPoly) -> bool:
        """Multiply back: ``prod(1 + z_i u) * quotient == c``."""
        if not self.degree_bound_ok:
            return False
        q = TruncatedPoly((1,) + self.quotient + (0,) * len(self.lines), "Z")
        return _line_product(self.lines, self.m) * q == c


def _as_poly(c, m: int | None) -> TruncatedPoly:
    if isinstance(c, TruncatedPoly):
        poly = c if m is None else c.truncate(m)
    else:
        coeffs = list(c)
        if m is None:
            m = len(coeffs) - 1
        if any(coeffs[m + 1:]):
            raise ValueError(f"class has terms above degree {m}")
        coeffs = coeffs[: m + 1] + [0] * (m + 1 - len(coeffs))
        poly = TruncatedPoly(tuple(coeffs), "Z")
    if poly[0] != 1:
        raise ValueError("total Chern class must have constant term 1")
    return poly


def divide_out_lines(c, lines: Sequence[int], m: int | None = None) -> DivisionCertificate:
    poly = _as_poly(c, m)
    m = poly.top_degree
    lines = tuple(int(z) for z in lines)
    full = poly * unit_inverse(_line_product(lines, m))
    for n in range(m - len(lines) + 1, m + 1):
        if full[n]:
            return DivisionCertificate(m, lines, full, False, n)
    return DivisionCertificate(m, lines, full, True)


@dataclass(frozen=True)
class EnumeratedSplit:
    chern: tuple[int, ...]  # (c_1, ..., c_m)
    lines: tuple[int, ...]
    certificate: DivisionCertificate

    def as_poly(self) -> TruncatedPoly:
        return TruncatedPoly((1,) + self.chern, "Z")

    def verify(self) -> bool:
        c = self.as_poly()
        return self.certificate.verify(c) and bool(schwarzenberger_check(c))


def _scan_lines(args) -> list[EnumeratedSplit]:
    m, r, coeff_bound, lines = args
    prod = _line_product(lines, m)
    free = m - r
    out = []
    # c_1..c_{m-r} determine the quotient (and hence c) uniquely once the lines are fixed
    for head in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=free):
        c_head = TruncatedPoly((1,) + head + (0,) * r, "Z")
        q = (c_head * unit_inverse(prod)).coeffs[: free + 1]
        c = prod * TruncatedPoly(tuple(q) + (0,) * r, "Z")
        if any(abs(x) > coeff_bound for x in c.coeffs[free + 1:]):
            continue
        if not cpm_split_admissible(c, lines, m).admissible:
            continue
        out.append(EnumeratedSplit(tuple(c.coeffs[1:]), lines, divide_out_lines(c, lines, m)))
    return out


def enumerate_split_chern(
    m: int, r: int, coeff_bound: int, line_bound: int, workers: int = 1
) -> list[EnumeratedSplit]:
    """All ``(c, lines)`` over ``CP^m`` with ``|c_i| <= coeff_bound``, ``|z_i| <= line_bound`` that pass the splitting test.

    Lines are reported as sorted tuples (the test is symmetric in them).
    Output is sorted by ``(c, lines)`` and does not depend on ``workers``.
    """
    if not 1 <= r <= 3:
        raise ValueError("r must be 1, 2 or 3")
    if m <= 2 * r - 1:
        raise ValueError(f"enumeration needs m > 2r - 1 = {2 * r - 1}, got m = {m}")
    if coeff_bound < 0 or line_bound < 0:
        raise ValueError("bounds must be nonnegative")
    tasks = [
        (m, r, coeff_bound, lines)
        for lines in itertools.combinations_with_replacement(range(-line_bound, line_bound + 1), r)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_lines, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        chunks = [_scan_lines(t) for t in tasks]
    results = [item for chunk in chunks for item in chunk]
    results.sort(key=lambda s: (s.chern, s.lines))
    return results
