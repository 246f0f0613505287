"""Quick invariant suite behind ``linesplit selftest``."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb
from typing import Callable

from .algebra import IntMatrix, smith_normal_form
from .chern import ChernVector, LineBundle, virtual_chern, virtual_chern_oracle
from .engine import SplitProblem, decide, profile_cpm
from .ring import TruncatedPoly
from .steenrod import SqExpr, adem_reduce
from .symfun import schwarzenberger_check
from .tables import pi_2m2, verify_uct

__all__ = ["CHECKS", "run_selftest"]


def _oracle_equivalence(rng: random.Random) -> bool:
    for _ in range(60):
        m = rng.randint(1, 8)
        r = rng.randint(1, min(3, m))
        xi = ChernVector.cpm(m, [rng.randint(-9, 9) for _ in range(m)])
        lines = [LineBundle.cpm(m, rng.randint(-9, 9)) for _ in range(r)]
        for n in range(m + 1):
            if virtual_chern(xi, lines, n) != virtual_chern_oracle(xi, lines, n):
                return False
    return True


def _tangent_classes(rng: random.Random) -> bool:
    return all(schwarzenberger_check([comb(m + 1, i) for i in range(m + 1)]) for m in range(1, 21))


def _schwarzenberger_negative(rng: random.Random) -> bool:
    res = schwarzenberger_check([1, 1, 1, 0])
    return not res and res.failing_k == 3 and res.value == Fraction(1, 2)


def _adem(rng: random.Random) -> bool:
    cases = {
        "Sq2Sq3": "Sq5 + Sq4Sq1",
        "Sq3Sq2": "0",
        "Sq2Sq2": "Sq3Sq1",
        "Sq2Sq1Sq2": "Sq5 + Sq4Sq1",
    }
    return all(adem_reduce(SqExpr.parse(a)) == SqExpr.parse(b) for a, b in cases.items())


def _tables(rng: random.Random) -> bool:
    return verify_uct().ok and all(12 % pi_2m2(m).order == 0 for m in range(6, 101, 2))


def _snf(rng: random.Random) -> bool:
    for _ in range(40):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        A = IntMatrix.from_rows([[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)])
        D, U, V = smith_normal_form(A)
        if U @ A @ V != D or abs(U.determinant()) != 1 or abs(V.determinant()) != 1:
            return False
        diag = [d for d in D.diagonal()]
        if any(b % a if a else b for a, b in zip(diag, diag[1:])):
            return False
    return True


def _cp3(rng: random.Random) -> bool:
    P = profile_cpm(3)
    xi = ChernVector.cpm(3, [4, 6, 4])
    one = decide(SplitProblem(P, xi, (LineBundle.cpm(3, 2),)))
    two = [
        decide(SplitProblem(P, xi, (LineBundle.cpm(3, a), LineBundle.cpm(3, b)))).exit_code
        for a in range(-10, 11) for b in range(a, 11)
    ]
    quotient = TruncatedPoly((1, 6, 15, 20, 15, 6)) * TruncatedPoly.linear(2, 5).inverse()
    return one.exit_code == 0 and all(code == 1 for code in two) and quotient[5] == 0


CHECKS: dict[str, Callable[[random.Random], bool]] = {
    "virtual classes agree with the inverse-product oracle": _oracle_equivalence,
    "tangent classes of CP^m pass the integrality test (m <= 20)": _tangent_classes,
    "1 + u + u^2 over CP^3 fails at k = 3 with value 1/2": _schwarzenberger_negative,
    "Adem reduction reproduces the four quoted relations": _adem,
    "universal coefficients and 12/|pi_(2m-2)| integrality": _tables,
    "Smith normal form on random matrices": _snf,
    "CP^3 tangent bundle: one line splits, no pair does": _cp3,
}


def run_selftest(seed: int = 0) -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS.items():
        try:
            ok, detail = fn(random.Random(seed)), ""
        except Exception as exc:  # report, never crash the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
