"""Seeded random generators for property suites and the reference runner.

Root denominators are kept small on purpose: grid reciprocals inherit them,
and window-sized difference tables combine hundreds of grid values, so the
common denominator (and with it the cost of exact arithmetic) grows with
every extra prime factor the roots bring in.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .ratpoly import FactoredPoly, TwoVarPoly


def _distinct_rationals(rng: random.Random, count: int, spread: int, den_cap: int) -> list[Fraction]:
    values: set[Fraction] = set()
    while len(values) < count:
        values.add(Fraction(rng.randint(1, spread), rng.randint(1, den_cap)))
    return sorted(values)


def random_lead(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 6), rng.randint(1, 3))


def random_interlacing_pair(
    rng: random.Random,
    k: int,
    spread: int = 60,
    den_cap: int = 4,
) -> TwoVarPoly:
    """p = b + a*y with deg(b) = k, deg(a) = k - 1 and strictly interlacing
    roots b_1 < a_1 < b_2 < ... < a_{k-1} < b_k."""
    if k < 2:
        raise ValueError(f"interlacing with deg(a) = k - 1 needs k >= 2, got {k}")
    chain = _distinct_rationals(rng, 2 * k - 1, spread, den_cap)
    b_roots = tuple(chain[0::2])
    a_roots = tuple(chain[1::2])
    return TwoVarPoly(
        FactoredPoly(random_lead(rng), b_roots),
        FactoredPoly(random_lead(rng), a_roots),
    )


def random_factored_pair(
    rng: random.Random,
    k: int,
    spread: int = 60,
    den_cap: int = 6,
) -> tuple[FactoredPoly, FactoredPoly]:
    """(b, a) with deg(b) = k, deg(a) = k - 1, distinct a-roots, no
    interlacing constraint (b-roots may repeat)."""
    b_roots = tuple(Fraction(rng.randint(1, spread), rng.randint(1, den_cap)) for _ in range(k))
    a_roots = tuple(_distinct_rationals(rng, k - 1, spread, den_cap))
    return (
        FactoredPoly(random_lead(rng), b_roots),
        FactoredPoly(random_lead(rng), a_roots),
    )
