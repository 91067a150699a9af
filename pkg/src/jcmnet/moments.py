"""Numerical verification of the moment-measure machinery behind the
interlacing sufficiency proof.

Algebraic targets (reciprocals of polynomial values, powers of t) are exact
rationals converted to binary64 at the comparison boundary; integrals and
series are floating point with explicit error control.  The measure under
test is mu(ds) = delta_1(ds) + w(s, t) ds where delta_1 contributes exactly
1 to every moment and

    w(s, t) = s**(a-1) * sum_{j>=1} (A log t)**j (-log s)**(j-1) / ((j-1)! j!)

is nonnegative on (0,1) whenever A <= 0 and t in (0,1).  Its m-th moment
must reproduce t**(A/(m+a)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from scipy.integrate import quad

from .errors import AccuracyError, DegreeError
from .ratpoly import FactoredPoly, TwoVarPoly, eval_factored

#: Subinterval cap for adaptive quadrature; 21-point rule per subinterval
#: keeps total evaluations under one million.
_QUAD_LIMIT = 47_000

#: Slack applied to floating-point difference tables (sign checks only).
CM_TABLE_SLACK = 1e-12

#: Series iteration hard stop; the factorial decay makes this unreachable
#: for any z representable in binary64 without overflowing the partial sums.
_SERIES_MAX_TERMS = 500


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_bound: float
    evaluations: int


@dataclass(frozen=True)
class WeightParams:
    """Residue A, pole a > 0, and t in (0,1) for one weight function."""

    A: Fraction
    a: Fraction
    t: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a <= 0:
            raise ValueError(f"pole must be positive, got {self.a}")
        if not (0.0 < self.t < 1.0):
            raise ValueError(f"t must lie in (0,1), got {self.t}")


def _integrate(f: Callable[[float], float], tol: float) -> QuadratureResult:
    out = quad(f, 0.0, 1.0, epsabs=tol, epsrel=tol, limit=_QUAD_LIMIT, full_output=1)
    value, abserr, info = out[0], out[1], out[2]
    return QuadratureResult(value, abserr, int(info["neval"]))


def _series_factor(z_coeff: float, y: float, tol: float) -> float:
    """sum_{j>=1} z_coeff**j * y**(j-1) / ((j-1)! j!)  =  z_coeff * S(z),
    S(z) = sum_{i>=0} z**i / (i! (i+1)!) with z = z_coeff * y.

    Terms decay factorially; once the term ratio z/((i+1)(i+2)) drops below
    1/2 the tail is bounded by a geometric series, and summation stops when
    that bound falls below tol times the partial sum.
    """
    z = z_coeff * y
    total = 1.0
    term = 1.0
    i = 0
    while i < _SERIES_MAX_TERMS:
        ratio = z / ((i + 1) * (i + 2))
        term *= ratio
        i += 1
        if abs(ratio) < 0.5 and 2.0 * abs(term) <= tol * abs(total):
            break
        total += term
    return z_coeff * total


def weight_eval(wp: WeightParams, s: float, tol: float = 1e-12) -> float:
    """Truncated-series value of w(s, t); tol is relative on the series."""
    if not (0.0 < s < 1.0):
        raise ValueError(f"s must lie in (0,1), got {s}")
    if wp.A == 0:
        return 0.0
    z_coeff = float(wp.A) * math.log(wp.t)
    y = -math.log(s)
    return s ** (float(wp.a) - 1.0) * _series_factor(z_coeff, y, tol)


def measure_moment(wp: WeightParams, m: int, tol: float = 1e-9) -> QuadratureResult:
    """m-th moment of mu = delta_1 + w ds: returns 1 + integral(s**m w(s,t) ds).

    Must reproduce t**(A/(m+a)).  For a < 1 the integrable s**(a-1) endpoint
    is removed by the substitution s = u**(1/a) before quadrature.
    """
    if m < 0:
        raise ValueError(f"moment order must be >= 0, got {m}")
    if wp.A == 0:
        return QuadratureResult(1.0, 0.0, 0)
    z_coeff = float(wp.A) * math.log(wp.t)
    series_tol = tol * 1e-3
    a = float(wp.a)
    if wp.a >= 1:
        exponent = m + a - 1.0

        def integrand(s: float) -> float:
            if s <= 0.0 or s >= 1.0:
                return 0.0
            return s**exponent * _series_factor(z_coeff, -math.log(s), series_tol)

    else:
        exponent = m / a

        def integrand(u: float) -> float:
            if u <= 0.0 or u >= 1.0:
                return 0.0
            return (u**exponent / a) * _series_factor(z_coeff, -math.log(u) / a, series_tol)

    integral = _integrate(integrand, tol * 0.1)
    error = integral.error_bound + series_tol * abs(integral.value)
    if error > tol:
        raise AccuracyError(
            f"moment quadrature error {error:.3e} exceeds tol {tol:.3e} (A={wp.A}, a={wp.a}, t={wp.t}, m={m})"
        )
    return QuadratureResult(1.0 + integral.value, error, integral.evaluations)


def moment_target(wp: WeightParams, m: int) -> float:
    """Closed-form moment t**(A/(m+a)), exact exponent converted at the end."""
    return wp.t ** float(wp.A / (m + wp.a))


def log_moment_identity(
    k: int,
    x: Fraction | int,
    n: int,
    tol: float = 1e-10,
) -> tuple[QuadratureResult, float]:
    """Quadrature check of
    ((-1)**(k-1)/(k-1)!) * integral_0^1 (log s)**(k-1) s**(x-1+n) ds = 1/(n+x)**k.

    The right side is computed exactly and converted.  When x + n < 1 the
    algebraic endpoint singularity at s = 0 is removed by substituting
    s = u**(1/(x+n)) before integrating.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    c = x + n
    sign = -1.0 if (k - 1) % 2 else 1.0
    scale = sign / math.factorial(k - 1)
    if c >= 1:
        exponent = float(c) - 1.0

        def integrand(s: float) -> float:
            if s <= 0.0 or s >= 1.0:
                return 0.0
            return math.log(s) ** (k - 1) * s**exponent

        raw = _integrate(integrand, tol * 0.1)
        value = scale * raw.value
        error = abs(scale) * raw.error_bound
    else:
        # After s = u**(1/c) the integral is (1/c**k) * integral (log u)**(k-1) du.
        factor = float(Fraction(1) / c**k)

        def integrand(u: float) -> float:
            if u <= 0.0 or u >= 1.0:
                return 0.0
            return math.log(u) ** (k - 1)

        raw = _integrate(integrand, tol * 0.1)
        value = scale * factor * raw.value
        error = abs(scale * factor) * raw.error_bound
    if error > tol:
        raise AccuracyError(f"log-moment quadrature error {error:.3e} exceeds tol {tol:.3e} (k={k}, x={x}, n={n})")
    rhs = float(Fraction(1) / c**k)
    return QuadratureResult(value, error, raw.evaluations), rhs


@dataclass(frozen=True)
class ExponentialMomentRow:
    t: float
    worst_margin: float
    passed: bool


@dataclass(frozen=True)
class ExponentialMomentReport:
    """Windowed float complete-monotonicity diagnostics for {t**(b(m)/a(m))}.

    Diagnostic only: a pass is finite-window evidence, and failures beyond
    the slack indicate the sequence is not a moment sequence at that t.
    """

    length: int
    rows: tuple[ExponentialMomentRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def exponential_moment_test(
    b: FactoredPoly,
    a: FactoredPoly,
    t_grid: Sequence[float],
    length: int,
) -> ExponentialMomentReport:
    if a.degree >= b.degree:
        raise DegreeError(f"need deg(a) < deg(b), got {a.degree} >= {b.degree}")
    if length < 2:
        raise ValueError(f"need length >= 2, got {length}")
    rows = []
    for t in t_grid:
        if not (0.0 < t < 1.0):
            raise ValueError(f"every t must lie in (0,1), got {t}")
        seq = [t ** float(eval_factored(b, m) / eval_factored(a, m)) for m in range(length)]
        worst = math.inf
        level = seq
        for order in range(length):
            sign = -1.0 if order % 2 else 1.0
            worst = min(worst, min(sign * v for v in level))
            level = [level[i + 1] - level[i] for i in range(len(level) - 1)]
            if not level:
                break
        rows.append(ExponentialMomentRow(t, worst, worst >= -CM_TABLE_SLACK))
    return ExponentialMomentReport(length, tuple(rows))


def moment_representation_check(p: TwoVarPoly, m: int, n: int, tol: float = 1e-9) -> QuadratureResult:
    """Quadrature of integral_0^1 t**(n + b(m)/a(m) - 1) / a(m) dt, which must
    equal 1/p(m, n) within tol."""
    ratio = eval_factored(p.b, m) / eval_factored(p.a, m)
    a_val = float(eval_factored(p.a, m))
    c = Fraction(n) + ratio
    if c >= 1:
        exponent = float(c) - 1.0

        def integrand(t: float) -> float:
            if t <= 0.0 or t >= 1.0:
                return 0.0
            return t**exponent / a_val

    else:
        # t = u**(1/c) flattens the integrand to the constant 1/(c * a(m)).
        constant = 1.0 / (float(c) * a_val)

        def integrand(u: float) -> float:
            return constant

    result = _integrate(integrand, tol * 0.1)
    if result.error_bound > tol:
        raise AccuracyError(f"representation quadrature error {result.error_bound:.3e} exceeds tol {tol:.3e}")
    return result
