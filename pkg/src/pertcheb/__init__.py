"""Exact arithmetic for perturbed Chebyshev polynomials of the second kind."""

from .connection import (
    CCTable,
    cc_canonical_dilatation,
    cc_canonical_translation,
    cc_closed_dilatation,
    cc_closed_translation,
    cc_recurrence,
    format_affine_symbolic,
    reconstruct,
    render_table_text,
)
from .core import (
    CosPoint,
    PerturbationSpec,
    Polynomial,
    RecurrenceSpec,
    apply_perturbation,
    canonical_cheb_coeff,
    chebyshev_spec,
    closed_form_zeros,
    evaluate,
    evaluate_point,
    generate,
    monomial_basis,
    norm_squared,
    perturbed_spec,
    second_kind_zeros,
)
from .errors import (
    AffineOverflow,
    InvalidOrder,
    MixedRadicand,
    NonPositiveGamma,
    NonRegular,
    PertChebError,
    PrecisionExhausted,
)
from .intersections import (
    IntersectionReport,
    coincidence_predicates,
    intersection_points,
    linearization_check,
    product_form,
)
from .scalars import AffineScalar, Interval, QuadExt, quad_compare
from .zeros import (
    ExtremalReport,
    GershgorinRegion,
    OriginReport,
    SymTridiagonal,
    ZeroReport,
    all_roots,
    count_real_roots,
    extremal_report,
    gershgorin,
    jacobi,
    origin_report,
    prop_dilatation_union,
    prop_translation_union,
    real_roots,
)

__version__ = "0.1.0"
