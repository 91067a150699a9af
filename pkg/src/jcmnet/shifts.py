"""Unilateral weighted shift built from the slice beta_m = 1/p(m, n) at
fixed n: weights, contraction/subnormality evidence, essential-normality
decay, and spectral-radius estimates.

Squared quantities (alpha**2, gamma**2, the squared z-norm) are kept as
exact rationals throughout; square roots appear only in display output,
since the square root of a rational is generally irrational.  The squared
z-norm beta_1/beta_0 is the stored convention and reports print both the
squared and unsquared values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cmnet import DifferenceCertificate, cm_check_1d
from .ratpoly import TwoVarPoly, format_rational


@dataclass(frozen=True)
class ShiftProfile:
    """Finite prefix of the shift data for beta_m = 1/p(m, n), m <= M.

    alpha_sq[m] = beta_{m+1}/beta_m are the squared weights,
    gamma_sq[m] = beta_m/beta_0 the squared basis norms, and
    commutator_diag the diagonal of T*T - TT* (alpha_0**2 first, then the
    consecutive alpha**2 gaps), which telescopes to alpha_{M-1}**2.
    """

    n: int
    M: int
    beta: tuple[Fraction, ...]
    alpha_sq: tuple[Fraction, ...]
    gamma_sq: tuple[Fraction, ...]
    commutator_diag: tuple[Fraction, ...]
    norm_z_sq: Fraction
    spectral_radius_est: float

    def __post_init__(self) -> None:
        if any(b <= 0 for b in self.beta):
            raise ValueError("every beta must be positive")
        if self.gamma_sq[0] != 1:
            raise ValueError(f"gamma_0**2 must be 1, got {self.gamma_sq[0]}")

    @classmethod
    def from_beta(cls, beta: Sequence[Fraction], n: int = 0) -> "ShiftProfile":
        """Profile for an arbitrary positive sequence (n is a label only)."""
        beta = tuple(Fraction(v) for v in beta)
        if len(beta) < 3:
            raise ValueError(f"need at least 3 values (M >= 2), got {len(beta)}")
        alpha_sq = tuple(beta[m + 1] / beta[m] for m in range(len(beta) - 1))
        gamma_sq = tuple(b / beta[0] for b in beta)
        commutator = (alpha_sq[0],) + tuple(
            alpha_sq[m] - alpha_sq[m - 1] for m in range(1, len(alpha_sq))
        )
        m_pow = max(1, (len(beta) - 1) // 2)
        estimate = _power_norm_estimate(beta, m_pow, len(beta) - 1 - m_pow)
        return cls(
            n=n,
            M=len(beta) - 1,
            beta=beta,
            alpha_sq=alpha_sq,
            gamma_sq=gamma_sq,
            commutator_diag=commutator,
            norm_z_sq=beta[1] / beta[0],
            spectral_radius_est=estimate,
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "M": self.M,
            "beta": [format_rational(b) for b in self.beta],
            "alpha_sq": [format_rational(a) for a in self.alpha_sq],
            "norm_z_sq": format_rational(self.norm_z_sq),
            "norm_z": math.sqrt(float(self.norm_z_sq)),
            "spectral_radius_est": self.spectral_radius_est,
        }


def _power_norm_estimate(beta: Sequence[Fraction], m_pow: int, i_cap: int) -> float:
    best = 0.0
    for i in range(i_cap + 1):
        ratio = float(beta[i + m_pow] / beta[i])
        best = max(best, ratio)
    return best ** (1.0 / (2 * m_pow))


def build_profile(p: TwoVarPoly, n: int, M: int) -> ShiftProfile:
    """Exact shift profile for the slice m -> 1/p(m, n), 0 <= m <= M."""
    if M < 2:
        raise ValueError(f"need M >= 2, got {M}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    beta = tuple(1 / p(m, n) for m in range(M + 1))
    return ShiftProfile.from_beta(beta, n=n)


@dataclass(frozen=True)
class SubnormalityReport:
    """Exact contraction check plus windowed moment-sequence evidence."""

    contraction: bool
    first_noncontraction: int | None
    cm_certificate: DifferenceCertificate

    @property
    def passed(self) -> bool:
        return self.contraction and self.cm_certificate.passed


def subnormal_contraction_check(profile: ShiftProfile, window_for_cm: int) -> SubnormalityReport:
    """Contraction is exact (alpha_m**2 <= 1 for every stored m); the moment
    property of beta is evidenced by a full 1-D difference table on a prefix."""
    first_bad = None
    for m, a2 in enumerate(profile.alpha_sq):
        if a2 > 1:
            first_bad = m
            break
    prefix = profile.beta[: max(2, min(window_for_cm, len(profile.beta)))]
    return SubnormalityReport(first_bad is None, first_bad, cm_check_1d(prefix))


@dataclass(frozen=True)
class EssentialNormalityReport:
    """Decay evidence for the self-commutator diagonal: this is never a
    compactness proof, only tail statistics for the stored prefix."""

    tail_start: int
    tail_max_abs: Fraction
    decay_exponent: float | None
    exactly_normal_tail: bool


def essential_normality_report(profile: ShiftProfile) -> EssentialNormalityReport:
    if profile.M < 10:
        raise ValueError(f"need M >= 10 for meaningful tail statistics, got M={profile.M}")
    tail_start = profile.M // 2
    tail = {m: profile.commutator_diag[m] for m in range(tail_start, len(profile.commutator_diag))}
    tail_max = max(abs(v) for v in tail.values())
    nonzero = {m: v for m, v in tail.items() if v != 0}
    if not nonzero:
        return EssentialNormalityReport(tail_start, tail_max, None, True)
    xs = np.log([float(m) for m in nonzero])
    ys = np.log([abs(float(v)) for v in nonzero.values()])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return EssentialNormalityReport(tail_start, tail_max, slope, False)


@dataclass(frozen=True)
class SpectralRadiusEstimate:
    """Lower estimates of the spectral radius from finite power norms.

    Each entry is max over 0 <= i <= i_cap of (beta_{i+m}/beta_i)**(1/(2m)),
    a lower bound on norm(T**m)**(1/m) because the true supremum runs over
    all i; estimates are nondecreasing in i_cap and converge upward to the
    spectral radius.
    """

    per_power: tuple[tuple[int, float], ...]
    i_cap: int

    @property
    def value(self) -> float:
        return self.per_power[-1][1]


def spectral_radius_estimate(
    profile: ShiftProfile,
    m_powers: Sequence[int],
    i_cap: int,
) -> SpectralRadiusEstimate:
    if not m_powers:
        raise ValueError("need at least one power")
    if i_cap + max(m_powers) > profile.M:
        raise ValueError(f"i_cap + max power = {i_cap + max(m_powers)} exceeds profile length M={profile.M}")
    estimates = tuple((m, _power_norm_estimate(profile.beta, m, i_cap)) for m in m_powers)
    return SpectralRadiusEstimate(estimates, i_cap)


@dataclass(frozen=True)
class WeightComparison:
    """Exact comparison of two squared-weight sequences; distinct weights
    witness non-equivalence of the corresponding shifts."""

    identical: bool
    first_difference_index: int | None
    norm_z_sq_1: Fraction
    norm_z_sq_2: Fraction
    compared: int


def unitary_equivalence_witness(
    p1: TwoVarPoly,
    p2: TwoVarPoly,
    n: int,
    M: int = 32,
) -> WeightComparison:
    prof1 = build_profile(p1, n, M)
    prof2 = build_profile(p2, n, M)
    first = None
    for m, (x, y) in enumerate(zip(prof1.alpha_sq, prof2.alpha_sq)):
        if x != y:
            first = m
            break
    return WeightComparison(first is None, first, prof1.norm_z_sq, prof2.norm_z_sq, M)
