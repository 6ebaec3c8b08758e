"""Exact DPD-pair calculus for real affine surfaces with circle actions."""

from .curves import (
    AFFINE_LINE,
    CIRCLE_CURVE,
    CurveKind,
    QDivisor,
    RealCurve,
    curve_kind,
    curve_validate,
    divisor_floor,
    divisor_leq,
    divisor_pullback_tau,
    point_conjugate,
    principal_divisor,
)
from .dpd import (
    DpdPair,
    TwistData,
    dpd_d_minus,
    dpd_extend,
    dpd_extend_empty_real,
    dpd_is_regular,
    dpd_local_reduce,
    dpd_restrict,
    dpd_twist,
    dpd_validate,
    regular_pair,
    section_generator,
    sigma_on_section,
    verify_presentation,
)
from .errors import DpdError
from .fibers import (
    ConjFiberType,
    RealFiberType,
    classify_conjugate_fiber,
    classify_real_fiber,
    fiber_report,
)
from .funcfield import (
    Polynomial,
    RationalFunction,
    poly_gaussian_roots,
    rf,
    rf_conjugate,
    rf_divisor_data,
    rf_evaluate,
    rf_is_real,
    rf_order_at,
)
from .mobius import Mobius
from .parsing import parse_curve, parse_divisor, parse_expression, parse_pair, parse_point
from .points import INF, CurvePoint, point
from .scalars import Gauss, Rational, gauss_conjugate, gauss_norm, rational_sign
from .topology import (
    ModelType,
    TopologyVerdict,
    canonical_pair,
    classify_real_locus,
    normalize_to_model,
    real_image,
    replay,
    verify_equivalence,
)
from .torsor import (
    NormWitness,
    TorsorPair,
    norm_equation,
    torsor_iso,
    torsor_over_point,
    torsor_pair_validate,
)

__version__ = "0.1.0"
