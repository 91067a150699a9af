"""Closed-form sufficient and necessary conditions for joint complete
monotonicity of {1/(b(m) + a(m) n)}, plus the exact bi-degree-(2,1)
classifier.

Conditions that are only necessary in the equal-degree regime (the product
and sum comparisons of the roots) are reported as a tristate so that their
failure on a deg(b) = deg(a) + 1 net is never mistaken for a verdict: for
such nets those conditions can fail while the net is joint completely
monotone.  No function here infers joint complete monotonicity from
necessary conditions alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .ratpoly import TwoVarPoly, eval_factored, format_rational

MODE_EQUAL = "l=k"
MODE_ONE_LESS = "l=k-1"

#: Default nonnegative abscissas for the derivative-inequality grid check.
DEFAULT_GRID: tuple[Fraction, ...] = tuple(Fraction(v) for v in (0, 1, 2, 5, 10))

JCM = "jcm"
NOT_JCM = "not_jcm"


class Tristate(Enum):
    NOT_APPLICABLE = "not_applicable"
    HOLDS = "holds"
    FAILS = "fails"


def interlace_check(
    a_roots: Sequence[Fraction],
    b_roots: Sequence[Fraction],
    mode: str,
) -> Tristate:
    """Alternating-chain check b1 <= a1 <= b2 <= ... in the requested mode.

    ``l=k-1`` expects one fewer a-root than b-roots and the chain ends on
    b_k; ``l=k`` expects equal counts and the chain ends on a_k.  A length
    mismatch renders the mode inapplicable rather than failed.
    """
    a = sorted(Fraction(r) for r in a_roots)
    b = sorted(Fraction(r) for r in b_roots)
    if mode == MODE_ONE_LESS:
        if len(a) != len(b) - 1:
            return Tristate.NOT_APPLICABLE
    elif mode == MODE_EQUAL:
        if len(a) != len(b):
            return Tristate.NOT_APPLICABLE
    else:
        raise ValueError(f"mode must be {MODE_EQUAL!r} or {MODE_ONE_LESS!r}, got {mode!r}")
    for i, ai in enumerate(a):
        if not (b[i] <= ai):
            return Tristate.FAILS
        if i + 1 < len(b) and not (ai <= b[i + 1]):
            return Tristate.FAILS
    return Tristate.HOLDS


def interlacing_is_strict(a_roots: Sequence[Fraction], b_roots: Sequence[Fraction], mode: str) -> bool | None:
    """Whether the chain holds with strict inequalities; None when the chain
    does not hold (or the mode is inapplicable).  Strictness decides the
    strict sign pattern of the decomposition (every A_i < 0, c > 0)."""
    if interlace_check(a_roots, b_roots, mode) != Tristate.HOLDS:
        return None
    a = sorted(Fraction(r) for r in a_roots)
    b = sorted(Fraction(r) for r in b_roots)
    for i, ai in enumerate(a):
        if b[i] == ai or (i + 1 < len(b) and ai == b[i + 1]):
            return False
    return True


@dataclass(frozen=True)
class NecessaryConditions:
    """Exact evaluations of the three root-comparison necessary conditions.

    The reciprocal-sum inequality is necessary in every regime; the product
    and sum inequalities are necessary only for deg(a) = deg(b) and are
    reported not-applicable otherwise (their raw outcomes are still kept
    for the report).
    """

    reciprocal_sum_holds: bool
    product: Tristate
    sum: Tristate
    reciprocal_lhs: Fraction
    reciprocal_rhs: Fraction
    product_lhs: Fraction  # prod of b-roots (must be <= prod of a-roots when l = k)
    product_rhs: Fraction
    sum_lhs: Fraction
    sum_rhs: Fraction


def necessary_conditions(
    a_roots: Sequence[Fraction],
    b_roots: Sequence[Fraction],
) -> NecessaryConditions:
    a = [Fraction(r) for r in a_roots]
    b = [Fraction(r) for r in b_roots]
    recip_lhs = sum((1 / r for r in a), Fraction(0))
    recip_rhs = sum((1 / r for r in b), Fraction(0))
    prod_a = Fraction(1)
    for r in a:
        prod_a *= r
    prod_b = Fraction(1)
    for r in b:
        prod_b *= r
    sum_a = sum(a, Fraction(0))
    sum_b = sum(b, Fraction(0))
    applicable = len(a) == len(b)

    def _tri(holds: bool) -> Tristate:
        if not applicable:
            return Tristate.NOT_APPLICABLE
        return Tristate.HOLDS if holds else Tristate.FAILS

    return NecessaryConditions(
        reciprocal_sum_holds=recip_lhs <= recip_rhs,
        product=_tri(prod_b <= prod_a),
        sum=_tri(sum_b <= sum_a),
        reciprocal_lhs=recip_lhs,
        reciprocal_rhs=recip_rhs,
        product_lhs=prod_b,
        product_rhs=prod_a,
        sum_lhs=sum_b,
        sum_rhs=sum_a,
    )


@dataclass(frozen=True)
class GridInequalityResult:
    """a'(x) b(x) <= a(x) b'(x) evaluated exactly at each grid point, plus
    the structural degree condition deg(a) <= deg(b)."""

    holds: bool
    degree_condition: bool
    failures: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return self.holds and self.degree_condition


def derivative_inequality_check(
    p: TwoVarPoly,
    grid: Sequence[Fraction] = DEFAULT_GRID,
) -> GridInequalityResult:
    degree_ok = p.a.degree <= p.b.degree
    failures = []
    for x in grid:
        x = Fraction(x)
        if x < 0:
            raise ValueError(f"grid points must be >= 0, got {x}")
        lhs = p.a.derivative_value(x) * eval_factored(p.b, x)
        rhs = eval_factored(p.a, x) * p.b.derivative_value(x)
        if lhs > rhs:
            failures.append(x)
    return GridInequalityResult(not failures, degree_ok, tuple(failures))


def classify_21(
    b0: Fraction,
    b1: Fraction,
    b2: Fraction,
    a0: Fraction,
    a1: Fraction,
) -> str:
    """Exact decision for b(x) = b0 (x+b1)(x+b2), a(x) = a0 (x+a1): the net
    {1/(b(m) + a(m) n)} is joint completely monotone iff b1 <= a1 <= b2."""
    b0, b1, b2, a0, a1 = (Fraction(v) for v in (b0, b1, b2, a0, a1))
    for name, v in (("b0", b0), ("b1", b1), ("b2", b2), ("a0", a0), ("a1", a1)):
        if v <= 0:
            raise ValueError(f"{name} must be positive, got {v}")
    if b1 > b2:
        raise ValueError(f"need b1 <= b2, got b1={b1}, b2={b2}")
    return JCM if b1 <= a1 <= b2 else NOT_JCM


@dataclass(frozen=True)
class CriteriaReport:
    interlacing_lk: Tristate
    interlacing_l_km1: Tristate
    reciprocal_sum_necessary: bool
    product_necessary: Tristate
    sum_necessary: Tristate
    derivative_inequality_grid: bool
    degree_condition: bool
    strict_interlacing: bool | None
    details: NecessaryConditions

    def to_json(self) -> dict:
        return {
            "interlacing_lk": self.interlacing_lk.value,
            "interlacing_l_km1": self.interlacing_l_km1.value,
            "reciprocal_sum_necessary": self.reciprocal_sum_necessary,
            "product_necessary": self.product_necessary.value,
            "sum_necessary": self.sum_necessary.value,
            "derivative_inequality_grid": self.derivative_inequality_grid,
            "degree_condition": self.degree_condition,
            "strict_interlacing": self.strict_interlacing,
            "reciprocal_sums": [
                format_rational(self.details.reciprocal_lhs),
                format_rational(self.details.reciprocal_rhs),
            ],
            "root_products": [
                format_rational(self.details.product_lhs),
                format_rational(self.details.product_rhs),
            ],
            "root_sums": [
                format_rational(self.details.sum_lhs),
                format_rational(self.details.sum_rhs),
            ],
        }


def evaluate_criteria(p: TwoVarPoly, grid: Sequence[Fraction] = DEFAULT_GRID) -> CriteriaReport:
    """Assemble the full closed-form report for one polynomial pair."""
    a_roots, b_roots = p.a.roots, p.b.roots
    nec = necessary_conditions(a_roots, b_roots)
    grid_result = derivative_inequality_check(p, grid)
    mode = MODE_EQUAL if len(a_roots) == len(b_roots) else MODE_ONE_LESS
    return CriteriaReport(
        interlacing_lk=interlace_check(a_roots, b_roots, MODE_EQUAL),
        interlacing_l_km1=interlace_check(a_roots, b_roots, MODE_ONE_LESS),
        reciprocal_sum_necessary=nec.reciprocal_sum_holds,
        product_necessary=nec.product,
        sum_necessary=nec.sum,
        derivative_inequality_grid=grid_result.holds,
        degree_condition=grid_result.degree_condition,
        strict_interlacing=interlacing_is_strict(a_roots, b_roots, mode),
        details=nec,
    )
