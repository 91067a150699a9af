"""Exact decompositions of b(x)/a(x) with verified reconstruction.

Two forms are produced, both certified by expanding the claimed identity
back into dense coefficients and comparing with b exactly:

* ``partial_fraction_decompose`` handles deg(b) = deg(a) + 1 and returns
  b(x)/a(x) = c0 * (x + c + sum_i A_i / (x + a_i)), with the closed forms
  c0 = b_lead/a_lead, c = sum(b roots) - sum(a roots), and
  A_i = prod_j (b_j - a_i) / prod_{j != i} (a_j - a_i).
* ``quotient_residue_decompose`` handles any deg(a) < deg(b) by long
  division plus simple-pole residues of the remainder.

Zero residues (a root of a coinciding with a root of b) are kept in the
output: downstream weight construction treats A_i = 0 as the zero weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError, SimpleRootsError
from .ratpoly import DensePoly, FactoredPoly, expand, format_rational


@dataclass(frozen=True)
class PartialFraction:
    """b(x) = c0 * ((x + c) a(x) + sum_i A_i * a(x)/(x + a_i))."""

    c0: Fraction
    c: Fraction
    residues: tuple[tuple[Fraction, Fraction], ...]  # (pole root a_i, A_i)

    def to_json(self) -> dict:
        return {
            "c0": format_rational(self.c0),
            "c": format_rational(self.c),
            "residues": [
                {"root": format_rational(root), "A": format_rational(a)} for root, a in self.residues
            ],
        }


@dataclass(frozen=True)
class QuotientResidue:
    """b(x) = quotient(x) * a(x) + sum_i residue_i * a(x)/(x + root_i)."""

    quotient: DensePoly
    residues: tuple[tuple[Fraction, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "quotient": [format_rational(c) for c in self.quotient.coefficients],
            "residues": [
                {"root": format_rational(root), "value": format_rational(v)} for root, v in self.residues
            ],
        }


@dataclass(frozen=True)
class ReconstructionCheck:
    """Result of comparing a reconstruction against b, coefficient by
    coefficient; truthy iff the identity holds exactly."""

    ok: bool
    power: int | None = None
    expected: Fraction | None = None
    actual: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "exact reconstruction"
        return (
            f"first differing coefficient at x^{self.power}: "
            f"expected {self.expected}, reconstructed {self.actual}"
        )


def _require_simple_roots(a: FactoredPoly) -> None:
    if a.has_repeated_roots():
        raise SimpleRootsError(f"roots of a must be pairwise distinct, got {a.roots}")


def partial_fraction_decompose(b: FactoredPoly, a: FactoredPoly) -> PartialFraction:
    """Closed-form decomposition for deg(b) = deg(a) + 1 with simple a-roots.

    The residues come from the product-ratio formula (no linear solve), and
    the reconstruction identity is verified exactly before returning.
    """
    if a.degree != b.degree - 1:
        raise DegreeError(f"need deg(a) = deg(b) - 1, got deg(a)={a.degree}, deg(b)={b.degree}")
    _require_simple_roots(a)
    c0 = b.lead / a.lead
    c = b.root_sum() - a.root_sum()
    residues = []
    for i, ai in enumerate(a.roots):
        numer = Fraction(1)
        for bj in b.roots:
            numer *= bj - ai
        denom = Fraction(1)
        for j, aj in enumerate(a.roots):
            if j != i:
                denom *= aj - ai
        residues.append((ai, numer / denom))
    result = PartialFraction(c0, c, tuple(residues))
    check = reconstruct_and_verify(result, b, a)
    if not check:
        raise AssertionError(f"reconstruction identity failed: {check.describe()}")
    return result


def quotient_residue_decompose(b: FactoredPoly, a: FactoredPoly) -> QuotientResidue:
    """Long division plus simple-pole residues, for any deg(a) < deg(b).

    Residues are recovered from the remainder by evaluation at the poles,
    residue_i = r(-a_i) / (a_lead * prod_{j != i} (a_j - a_i)), which needs
    no derivatives and stays exact.
    """
    if a.degree >= b.degree:
        raise DegreeError(f"need deg(a) < deg(b), got deg(a)={a.degree}, deg(b)={b.degree}")
    _require_simple_roots(a)
    quotient, remainder = expand(b).divmod(expand(a))
    residues = []
    for i, ai in enumerate(a.roots):
        denom = a.lead
        for j, aj in enumerate(a.roots):
            if j != i:
                denom *= aj - ai
        residues.append((ai, remainder(-ai) / denom))
    result = QuotientResidue(quotient, tuple(residues))
    check = reconstruct_and_verify(result, b, a)
    if not check:
        raise AssertionError(f"reconstruction identity failed: {check.describe()}")
    return result


def reconstruct_and_verify(
    d: PartialFraction | QuotientResidue,
    b: FactoredPoly,
    a: FactoredPoly,
) -> ReconstructionCheck:
    """Re-expand the decomposition and compare with b coefficient-wise."""
    if isinstance(d, PartialFraction):
        inner = DensePoly.linear(d.c) * expand(a)
        for root, res in d.residues:
            inner = inner + _cofactor(a, root).scale(res)
        reconstructed = inner.scale(d.c0)
    else:
        reconstructed = d.quotient * expand(a)
        for root, res in d.residues:
            reconstructed = reconstructed + _cofactor(a, root).scale(res)
    return _compare(expand(b), reconstructed)


def _cofactor(a: FactoredPoly, root: Fraction) -> DensePoly:
    """Expansion of a(x)/(x + root), for root a member of a.roots."""
    index = a.roots.index(root)
    return expand(a.drop_root(index))


def _compare(expected: DensePoly, actual: DensePoly) -> ReconstructionCheck:
    width = max(len(expected.coefficients), len(actual.coefficients))
    for power in range(width):
        e = expected.coefficients[power] if power < len(expected.coefficients) else Fraction(0)
        g = actual.coefficients[power] if power < len(actual.coefficients) else Fraction(0)
        if e != g:
            return ReconstructionCheck(False, power, e, g)
    return ReconstructionCheck(True)
