"""Exact forward-difference tables and complete-monotonicity window checks.

A net {x(m,n)} is joint completely monotone (JCM) when every mixed forward
difference satisfies (-1)**|beta| * Delta**beta x(alpha) >= 0.  The checks
here truncate the quantifier to a finite window and report exact verdicts:

* a ``violation`` certificate is rigorous — the net is definitely not JCM;
* a ``pass`` certificate only says "no violation up to this window" and is
  never a proof of joint complete monotonicity.

All grid values and differences are exact rationals, so there are no
tolerance questions anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratpoly import TwoVarPoly, format_rational

PASS = "pass"
VIOLATION = "violation"

PASS_SEMANTICS = "pass = no violation found up to the window; not a proof of joint complete monotonicity"

#: Window schedule used when hunting for a violation certificate.
SEARCH_SCHEDULE: tuple[tuple[int, int], ...] = ((5, 5), (10, 10), (20, 20), (40, 40))


@dataclass(frozen=True)
class Window:
    """Extent of the truncated quantifier: all (alpha, beta) with
    alpha + beta componentwise inside [0, M] x [0, N] are checked.

    N = 0 is the degenerate single-column case used for 1-D sequences.
    """

    M: int
    N: int

    def __post_init__(self) -> None:
        if self.M < 1 or self.N < 0:
            raise ValueError(f"window needs M >= 1 and N >= 0, got ({self.M}, {self.N})")


@dataclass(frozen=True)
class Witness:
    """One violating pair: (-1)**|beta| * value < 0 at base point alpha."""

    alpha: tuple[int, int]
    beta: tuple[int, int]
    value: Fraction

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "value": format_rational(self.value),
        }


@dataclass(frozen=True)
class DifferenceCertificate:
    """Outcome of a windowed monotonicity check.

    ``witness`` is the first violation in scan order; ``violations`` lists
    every violating (alpha, beta) in the window so callers can look up a
    specific pair.  A violation is rigorous; a pass is window-limited
    evidence only (see PASS_SEMANTICS).
    """

    verdict: str
    window: Window
    witness: Witness | None = None
    violations: tuple[Witness, ...] = ()

    def __post_init__(self) -> None:
        if self.verdict == VIOLATION and self.witness is None:
            raise ValueError("violation certificates must carry a witness")
        if self.verdict == PASS and self.violations:
            raise ValueError("pass certificates cannot carry violations")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def violation_at(self, alpha: tuple[int, int], beta: tuple[int, int]) -> Witness | None:
        for w in self.violations:
            if w.alpha == alpha and w.beta == beta:
                return w
        return None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness else None,
            "window": [self.window.M, self.window.N],
            "violations": [w.to_json() for w in self.violations],
            "semantics": PASS_SEMANTICS if self.verdict == PASS else "violation certificate is exact and rigorous",
        }


Grid = Sequence[Sequence[Fraction]]


def mixed_difference(
    values: Grid,
    alpha: tuple[int, int],
    beta: tuple[int, int],
    cross_check: bool = False,
) -> Fraction:
    """Delta**beta applied at alpha, by the binomial expansion
    sum_{gamma <= beta} (-1)**(|beta|-|gamma|) C(beta,gamma) x(alpha+gamma).

    With ``cross_check`` the iterated single-step path is evaluated too and
    must agree exactly.
    """
    a1, a2 = alpha
    b1, b2 = beta
    if min(a1, a2, b1, b2) < 0:
        raise IndexError(f"negative multi-index: alpha={alpha}, beta={beta}")
    if a1 + b1 >= len(values) or a2 + b2 >= len(values[0]):
        raise IndexError(
            f"alpha+beta=({a1 + b1},{a2 + b2}) outside grid extents "
            f"({len(values) - 1},{len(values[0]) - 1})"
        )
    total = Fraction(0)
    for g1 in range(b1 + 1):
        c1 = math.comb(b1, g1)
        row = values[a1 + g1]
        for g2 in range(b2 + 1):
            term = c1 * math.comb(b2, g2) * row[a2 + g2]
            if (b1 + b2 - g1 - g2) % 2:
                total -= term
            else:
                total += term
    if cross_check:
        iterated = mixed_difference_iterated(values, alpha, beta)
        if iterated != total:
            raise AssertionError(
                f"binomial and iterated difference paths disagree at alpha={alpha}, beta={beta}: "
                f"{total} vs {iterated}"
            )
    return total


def mixed_difference_iterated(values: Grid, alpha: tuple[int, int], beta: tuple[int, int]) -> Fraction:
    """Same quantity via repeated single-step differences (independent path)."""
    a1, a2 = alpha
    b1, b2 = beta
    block = [[values[a1 + i][a2 + j] for j in range(b2 + 1)] for i in range(b1 + 1)]
    for _ in range(b1):
        block = [[block[i + 1][j] - block[i][j] for j in range(len(block[0]))] for i in range(len(block) - 1)]
    for _ in range(b2):
        block = [[row[j + 1] - row[j] for j in range(len(row) - 1)] for row in block]
    return block[0][0]


def reciprocal_grid(p: TwoVarPoly, window: Window) -> list[list[Fraction]]:
    """Exact grid of 1/p(m, n) for m in 0..M, n in 0..N."""
    return [[1 / p(m, n) for n in range(window.N + 1)] for m in range(window.M + 1)]


def _diff_rows(table: list[list[Fraction]]) -> list[list[Fraction]]:
    return [
        [table[i + 1][j] - table[i][j] for j in range(len(table[0]))]
        for i in range(len(table) - 1)
    ]


def _diff_cols(table: list[list[Fraction]]) -> list[list[Fraction]]:
    return [[row[j + 1] - row[j] for j in range(len(row) - 1)] for row in table]


def _scan(
    grid: list[list[Fraction]],
    window: Window,
    axes_only: bool,
    first_only: bool,
) -> list[Witness]:
    """Walk difference tables by the one-step recurrence and collect sign
    violations.  The recurrence touches each (alpha, beta) pair exactly once,
    which is what keeps full-window scans cheap in exact arithmetic.
    """
    found: list[Witness] = []
    by_col = grid
    for b2 in range(window.N + 1):
        table = by_col
        b1_max = window.M if (not axes_only or b2 == 0) else 0
        for b1 in range(b1_max + 1):
            if not axes_only or b1 == 0 or b2 == 0:
                negative = (b1 + b2) % 2 == 1
                for a1, row in enumerate(table):
                    for a2, value in enumerate(row):
                        bad = value > 0 if negative else value < 0
                        if bad:
                            found.append(Witness((a1, a2), (b1, b2), value))
                            if first_only:
                                return found
            if b1 < b1_max:
                table = _diff_rows(table)
        if b2 < window.N:
            by_col = _diff_cols(by_col)
    return found


def _certify(window: Window, found: list[Witness]) -> DifferenceCertificate:
    if found:
        return DifferenceCertificate(VIOLATION, window, witness=found[0], violations=tuple(found))
    return DifferenceCertificate(PASS, window)


def jcm_check(p: TwoVarPoly, w: Window, first_only: bool = False) -> DifferenceCertificate:
    """Check (-1)**|beta| Delta**beta (1/p)(alpha) >= 0 over the window.

    ``first_only`` stops at the first violation (used by expanding-window
    searches); otherwise all violating pairs are collected.
    """
    grid = reciprocal_grid(p, w)
    return _certify(w, _scan(grid, w, axes_only=False, first_only=first_only))


def separate_cm_check(p: TwoVarPoly, w: Window, first_only: bool = False) -> DifferenceCertificate:
    """Single-direction check: (-1)**k Delta_j**k (1/p)(alpha) >= 0 for j = 1, 2."""
    grid = reciprocal_grid(p, w)
    return _certify(w, _scan(grid, w, axes_only=True, first_only=first_only))


def cm_check_1d(seq: Sequence[Fraction]) -> DifferenceCertificate:
    """Full triangular difference table for a 1-D sequence.

    The sequence is treated as a single-column net: window (len-1, 0),
    witnesses carry multi-indices (i, 0) and (k, 0).
    """
    if len(seq) < 2:
        raise ValueError(f"need at least 2 terms, got {len(seq)}")
    grid = [[Fraction(v)] for v in seq]
    window = Window(len(seq) - 1, 0)
    return _certify(window, _scan(grid, window, axes_only=False, first_only=False))


def search_violation(
    p: TwoVarPoly,
    schedule: Sequence[tuple[int, int]] = SEARCH_SCHEDULE,
) -> DifferenceCertificate | None:
    """Expanding-window hunt for a violation certificate.

    Returns the first violation certificate found, or None when the budget
    (the last window of the schedule) is exhausted without one.  Exhaustion
    is not evidence of joint complete monotonicity.
    """
    for m, n in schedule:
        cert = jcm_check(p, Window(m, n), first_only=True)
        if not cert.passed:
            return cert
    return None
