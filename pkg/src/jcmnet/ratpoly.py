"""Exact rational scalars and factored/dense polynomial representations.

Everything here is immutable and exact: scalars are `fractions.Fraction`
(always normalized, positive denominator), polynomials are either a factored
product ``lead * prod(x + r_j)`` with positive lead and positive shift-roots,
or a dense coefficient list used as the expansion target for identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, DegreeError

Rational = Fraction


def parse_rational(value: int | str | Fraction) -> Fraction:
    """Parse an exact rational from "p/q", a finite decimal string, or an int.

    Floats are rejected: binary floats do not round-trip the decimal the user
    typed, and every certificate downstream depends on exactness.
    """
    if isinstance(value, bool):
        raise ConfigError("cannot interpret a boolean as a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        raise ConfigError(
            f"refusing float {value!r}: pass a string like '9/2' or '4.5' for exact parsing"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"malformed rational {value!r}: {exc}") from exc
    raise ConfigError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


@dataclass(frozen=True)
class FactoredPoly:
    """Polynomial ``lead * prod_j (x + roots[j])`` with lead > 0, roots > 0.

    Roots are stored as the shift values r, so the factor is (x + r); this
    keeps every evaluation on the nonnegative axis strictly positive.
    Repeated roots are allowed here; operations that need simple roots
    reject them at their own boundary.
    """

    lead: Fraction
    roots: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lead", Fraction(self.lead))
        object.__setattr__(self, "roots", tuple(Fraction(r) for r in self.roots))
        if self.lead <= 0:
            raise ValueError(f"lead must be positive, got {self.lead}")
        for r in self.roots:
            if r <= 0:
                raise ValueError(f"every root must be positive, got {r}")

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __call__(self, x: Fraction | int) -> Fraction:
        return eval_factored(self, x)

    def derivative_value(self, x: Fraction | int) -> Fraction:
        """Exact derivative at x via the product rule over factors."""
        x = Fraction(x)
        total = Fraction(0)
        for i in range(len(self.roots)):
            term = self.lead
            for j, r in enumerate(self.roots):
                if j != i:
                    term *= x + r
            total += term
        return total

    def drop_root(self, index: int) -> "FactoredPoly":
        """The cofactor with roots[index] removed (same lead)."""
        return FactoredPoly(self.lead, self.roots[:index] + self.roots[index + 1 :])

    def scale(self, factor: Fraction) -> "FactoredPoly":
        return FactoredPoly(self.lead * Fraction(factor), self.roots)

    def has_repeated_roots(self) -> bool:
        return len(set(self.roots)) != len(self.roots)

    def root_sum(self) -> Fraction:
        return sum(self.roots, Fraction(0))

    def root_product(self) -> Fraction:
        prod = Fraction(1)
        for r in self.roots:
            prod *= r
        return prod

    @classmethod
    def from_literal(cls, literal: dict) -> "FactoredPoly":
        """Build from the JSON literal {"lead": "p/q", "roots": ["p/q", ...]}."""
        if not isinstance(literal, dict):
            raise ConfigError(f"polynomial literal must be an object, got {literal!r}")
        unknown = set(literal) - {"lead", "roots"}
        if unknown:
            raise ConfigError(f"unknown polynomial literal fields: {sorted(unknown)}")
        lead = parse_rational(literal.get("lead", 1))
        roots = tuple(parse_rational(r) for r in literal.get("roots", ()))
        return cls(lead, roots)

    def to_literal(self) -> dict:
        return {"lead": format_rational(self.lead), "roots": [format_rational(r) for r in self.roots]}


@dataclass(frozen=True)
class DensePoly:
    """Dense coefficient list, ``coefficients[i]`` multiplying x**i.

    Normalized so the highest-power coefficient is nonzero (the zero
    polynomial is the empty tuple).
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coefficients) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "DensePoly") -> "DensePoly":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(tuple(out))

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + other.scale(Fraction(-1))

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        if not self.coefficients or not other.coefficients:
            return DensePoly(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, ci in enumerate(self.coefficients):
            for j, cj in enumerate(other.coefficients):
                out[i + j] += ci * cj
        return DensePoly(tuple(out))

    def scale(self, factor: Fraction) -> "DensePoly":
        factor = Fraction(factor)
        return DensePoly(tuple(c * factor for c in self.coefficients))

    def divmod(self, divisor: "DensePoly") -> tuple["DensePoly", "DensePoly"]:
        """Exact polynomial long division: self = quotient * divisor + remainder."""
        if not divisor.coefficients:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dlead = divisor.coefficients[-1]
        dn = len(divisor.coefficients)
        if len(rem) < dn:
            return DensePoly(()), DensePoly(tuple(rem))
        quot = [Fraction(0)] * (len(rem) - dn + 1)
        for k in range(len(quot) - 1, -1, -1):
            factor = rem[k + dn - 1] / dlead
            quot[k] = factor
            if factor:
                for j, c in enumerate(divisor.coefficients):
                    rem[k + j] -= factor * c
        return DensePoly(tuple(quot)), DensePoly(tuple(rem[: dn - 1]))

    @classmethod
    def constant(cls, value: Fraction | int) -> "DensePoly":
        return cls((Fraction(value),))

    @classmethod
    def linear(cls, constant: Fraction | int, slope: Fraction | int = 1) -> "DensePoly":
        return cls((Fraction(constant), Fraction(slope)))


@dataclass(frozen=True)
class TwoVarPoly:
    """p(x, y) = b(x) + a(x) * y with factored positive-rooted a and b.

    The standard regime requires deg(a) < deg(b); construct with
    ``require_lower_degree=False`` for the equal-degree criteria or for
    structural counterchecks with deg(a) > deg(b).  Positivity of p on the
    closed positive quadrant is automatic from positive leads and roots.
    """

    b: FactoredPoly
    a: FactoredPoly
    require_lower_degree: bool = True

    def __post_init__(self) -> None:
        if self.require_lower_degree and self.a.degree >= self.b.degree:
            raise DegreeError(
                f"deg(a)={self.a.degree} must be < deg(b)={self.b.degree}; "
                "pass require_lower_degree=False to lift this"
            )

    def __call__(self, m: int | Fraction, n: int | Fraction) -> Fraction:
        return eval_p(self, m, n)

    @property
    def k(self) -> int:
        return self.b.degree

    @property
    def l(self) -> int:
        return self.a.degree

    @classmethod
    def from_literal(cls, literal: dict, require_lower_degree: bool = True) -> "TwoVarPoly":
        if not isinstance(literal, dict):
            raise ConfigError(f"polynomial literal must be an object, got {literal!r}")
        unknown = set(literal) - {"b", "a"}
        if unknown:
            raise ConfigError(f"unknown two-variable literal fields: {sorted(unknown)}")
        if "b" not in literal or "a" not in literal:
            raise ConfigError('two-variable literal needs both "b" and "a"')
        return cls(
            FactoredPoly.from_literal(literal["b"]),
            FactoredPoly.from_literal(literal["a"]),
            require_lower_degree=require_lower_degree,
        )

    def to_literal(self) -> dict:
        return {"b": self.b.to_literal(), "a": self.a.to_literal()}


def eval_factored(f: FactoredPoly, x: Fraction | int) -> Fraction:
    x = Fraction(x)
    value = f.lead
    for r in f.roots:
        value *= x + r
    return value


def eval_p(p: TwoVarPoly, m: int | Fraction, n: int | Fraction) -> Fraction:
    return eval_factored(p.b, m) + eval_factored(p.a, m) * Fraction(n)


def expand(f: FactoredPoly) -> DensePoly:
    """Expand a factored polynomial into exact dense coefficients."""
    poly = DensePoly.constant(f.lead)
    for r in f.roots:
        poly = poly * DensePoly.linear(r)
    return poly
