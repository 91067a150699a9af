"""Verification library for joint complete monotonicity of the nets
{1/p(m, n)} with p(x, y) = b(x) + a(x) y and factored positive-rooted a, b.

Exact rational arithmetic backs every certificate; floating point appears
only where targets are transcendental (integrals, series), always with an
explicit tolerance.
"""

from .cmnet import (
    DifferenceCertificate,
    Window,
    Witness,
    cm_check_1d,
    jcm_check,
    mixed_difference,
    mixed_difference_iterated,
    search_violation,
    separate_cm_check,
)
from .counterex import (
    FAMILIES,
    FAMILY1,
    FAMILY2,
    FamilySpec,
    ThresholdBracket,
    delta11_at,
    delta11_closed_form,
    family_condition_value,
    family_scan,
    hyperbola_condition,
    threshold_bisect,
)
from .criteria import (
    CriteriaReport,
    Tristate,
    classify_21,
    derivative_inequality_check,
    evaluate_criteria,
    interlace_check,
    necessary_conditions,
)
from .decomp import (
    PartialFraction,
    QuotientResidue,
    partial_fraction_decompose,
    quotient_residue_decompose,
    reconstruct_and_verify,
)
from .errors import AccuracyError, BracketError, ConfigError, DegreeError, SimpleRootsError
from .moments import (
    ExponentialMomentReport,
    QuadratureResult,
    WeightParams,
    exponential_moment_test,
    log_moment_identity,
    measure_moment,
    moment_representation_check,
    moment_target,
    weight_eval,
)
from .ratpoly import (
    DensePoly,
    FactoredPoly,
    Rational,
    TwoVarPoly,
    eval_factored,
    eval_p,
    expand,
    parse_rational,
)
from .shifts import (
    ShiftProfile,
    build_profile,
    essential_normality_report,
    spectral_radius_estimate,
    subnormal_contraction_check,
    unitary_equivalence_witness,
)

__version__ = "0.1.0"
