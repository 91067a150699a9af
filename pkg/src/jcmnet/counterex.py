"""Counterexample families with deg(b) = 3, deg(a) = 1.

For p(x, y) = (x+b1)(x+b2)(x+b3) + (x+a1) y, the mixed difference
Delta_1 Delta_2 (1/p) at (m, n) equals -(a(m+1))/D2 + a(m)/D1 with

    D1 = (b(m)   + a(m)(n+1))   * (b(m)   + a(m) n)
    D2 = (b(m+1) + a(m+1)(n+1)) * (b(m+1) + a(m+1) n)

so its sign at (0, 1) with a1 = 1 is the sign of D2 - 2*D1.  Two
one-parameter families make that quantity a degree-6 polynomial in the
parameter; wherever it is negative the net has an order-(1,1) violation
and is not joint completely monotone.  Thresholds are located by exact
rational bisection and reported as brackets, never as bare floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cmnet import DifferenceCertificate, Window, jcm_check
from .errors import BracketError, DegreeError
from .ratpoly import DensePoly, FactoredPoly, TwoVarPoly, eval_factored, format_rational


@dataclass(frozen=True)
class FamilySpec:
    """One-parameter family: b-roots are fixed positive multiples of the
    parameter, a(x) = x + 1, leads 1."""

    id: str
    multipliers: tuple[int, int, int]
    condition: DensePoly  # sign polynomial in the parameter, ascending powers

    def roots(self, b: Fraction) -> tuple[Fraction, Fraction, Fraction]:
        b = Fraction(b)
        if b <= 0:
            raise ValueError(f"family parameter must be positive, got {b}")
        return tuple(m * b for m in self.multipliers)

    def polynomial(self, b: Fraction) -> TwoVarPoly:
        return TwoVarPoly(
            FactoredPoly(Fraction(1), self.roots(b)),
            FactoredPoly(Fraction(1), (Fraction(1),)),
        )


FAMILY1 = FamilySpec(
    "family1",
    (1, 2, 3),
    DensePoly(tuple(Fraction(c) for c in (11, 48, 124, 144, 193, 132, -36))),
)

FAMILY2 = FamilySpec(
    "family2",
    (1, 1, 1),
    DensePoly(tuple(Fraction(c) for c in (11, 24, 33, 20, 15, 6, -1))),
)

FAMILIES = {FAMILY1.id: FAMILY1, FAMILY2.id: FAMILY2}


def slice_denominators(p: TwoVarPoly, m: int, n: int) -> tuple[Fraction, Fraction]:
    """(D1, D2) for the closed form of Delta_1 Delta_2 (1/p) at (m, n)."""
    b_m, b_m1 = eval_factored(p.b, m), eval_factored(p.b, m + 1)
    a_m, a_m1 = eval_factored(p.a, m), eval_factored(p.a, m + 1)
    d1 = (b_m + a_m * (n + 1)) * (b_m + a_m * n)
    d2 = (b_m1 + a_m1 * (n + 1)) * (b_m1 + a_m1 * n)
    return d1, d2


def delta11_at(p: TwoVarPoly, m: int, n: int) -> Fraction:
    """Exact Delta_1 Delta_2 (1/p)(m, n) straight from the definition."""
    if p.b.degree != 3 or p.a.degree != 1:
        raise DegreeError(f"expected deg(b)=3 and deg(a)=1, got ({p.b.degree}, {p.a.degree})")
    return 1 / p(m + 1, n + 1) - 1 / p(m, n + 1) - 1 / p(m + 1, n) + 1 / p(m, n)


def delta11_closed_form(p: TwoVarPoly, m: int, n: int) -> Fraction:
    """Independent path: -a(m+1)/D2 + a(m)/D1."""
    if p.b.degree != 3 or p.a.degree != 1:
        raise DegreeError(f"expected deg(b)=3 and deg(a)=1, got ({p.b.degree}, {p.a.degree})")
    d1, d2 = slice_denominators(p, m, n)
    return -eval_factored(p.a, m + 1) / d2 + eval_factored(p.a, m) / d1


def hyperbola_condition(t1: Fraction, t2: Fraction) -> bool:
    """Sign test at (m, n) = (0, 1) with a1 = 1, given t1 = prod(b_j) and
    t2 = prod(1 + b_j): true when 2(t2+3)**2 - 4(t1+3/2)**2 < 1.

    Cross-checked against the equivalent D2 - 2*D1 < 0 with
    D1 = (t1+1)(t1+2), D2 = (t2+2)(t2+4); the two rational forms satisfy
    2(t2+3)**2 - 4(t1+3/2)**2 - 1 == 2*(D2 - 2*D1) identically.
    """
    t1, t2 = Fraction(t1), Fraction(t2)
    if t1 <= 0 or t2 <= 0:
        raise ValueError(f"t1, t2 must be positive, got ({t1}, {t2})")
    quadratic_form = 2 * (t2 + 3) ** 2 - 4 * (t1 + Fraction(3, 2)) ** 2 - 1
    d_gap = (t2 + 2) * (t2 + 4) - 2 * (t1 + 1) * (t1 + 2)
    if quadratic_form != 2 * d_gap:
        raise AssertionError(
            f"rational forms disagree at t1={t1}, t2={t2}: {quadratic_form} vs 2*{d_gap}"
        )
    return d_gap < 0


def family_condition_value(f: FamilySpec, b: Fraction) -> Fraction:
    """Exact value of the family's sign polynomial; negative iff the (0,1)
    mixed difference of the family net at parameter b is negative."""
    b = Fraction(b)
    if b <= 0:
        raise ValueError(f"family parameter must be positive, got {b}")
    return f.condition(b)


@dataclass(frozen=True)
class ThresholdBracket:
    """Certified bracket around the positive root of a family condition
    polynomial: the condition has opposite signs at lo and hi."""

    lo: Fraction
    hi: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "midpoint": format_rational(self.midpoint),
        }


def threshold_bisect(
    f: FamilySpec,
    lo: Fraction,
    hi: Fraction,
    tol: Fraction = Fraction(1, 1000),
) -> ThresholdBracket:
    """Exact bisection of the family condition polynomial to a bracket of
    width <= tol; the returned midpoint is within tol/2 of the root."""
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if not lo < hi:
        raise BracketError(f"need lo < hi, got [{lo}, {hi}]")
    v_lo = family_condition_value(f, lo)
    v_hi = family_condition_value(f, hi)
    if v_lo == 0:
        return ThresholdBracket(lo, lo)
    if v_hi == 0:
        return ThresholdBracket(hi, hi)
    if (v_lo < 0) == (v_hi < 0):
        raise BracketError(f"no sign change for {f.id} on [{lo}, {hi}]: {v_lo} and {v_hi}")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v_mid = family_condition_value(f, mid)
        if v_mid == 0:
            return ThresholdBracket(mid, mid)
        if (v_mid < 0) == (v_lo < 0):
            lo, v_lo = mid, v_mid
        else:
            hi, v_hi = mid, v_mid
    return ThresholdBracket(lo, hi)


@dataclass(frozen=True)
class FamilyScanRow:
    b: Fraction
    condition_value: Fraction
    certificate: DifferenceCertificate | None

    @property
    def sign(self) -> str:
        if self.condition_value < 0:
            return "-"
        return "+" if self.condition_value > 0 else "0"


def family_scan(
    f: FamilySpec,
    b_values: Sequence[Fraction],
    window: Window | None = None,
) -> tuple[FamilyScanRow, ...]:
    """Condition sign per parameter value, optionally with a windowed
    certificate for the full net.  Exploratory tooling: a window pass here
    decides nothing."""
    rows = []
    for b in b_values:
        b = Fraction(b)
        value = family_condition_value(f, b)
        cert = jcm_check(f.polynomial(b), window) if window is not None else None
        rows.append(FamilyScanRow(b, value, cert))
    return tuple(rows)
