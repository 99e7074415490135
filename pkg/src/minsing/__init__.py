"""Exact computation of minimal singular-vector weights for simply-laced
affine vacuum modules at level kappa = p/q - h."""

__version__ = "0.1.0"

from .errors import (
    AssemblyError,
    ConfigurationError,
    DomainError,
    InternalConsistencyError,
    MinsingError,
    SearchExhaustedError,
)
from .root_systems import RootSystem, Weight, build_root_system, height, roots_of_height
from .weyl import (
    FormalSum,
    Reduced,
    descent_with_steps,
    reduce_auto,
    reduce_shifted,
    reduce_sorted_type_a,
    reduce_sorted_type_d,
)
from .layers import (
    LevelParam,
    antisymmetric_part,
    default_max_depth,
    factor_pairs,
    first_nonzero_layer,
    layer_sum,
    pair_layer,
)
from .closed_form import (
    ClosedAnswer,
    closed_form_type_a,
    closed_form_type_d,
    closed_form_type_e,
    closed_minimum,
    integrable_minimum,
    layer_cost,
    min_layer_cost,
    parity_min_cost,
)
from .report import (
    SingularReport,
    VerificationOutcome,
    assemble,
    cross_check,
    report_for,
    report_from_record,
    report_to_record,
    simple_root_coefficients,
    type_a_prefix_coefficients,
)

__all__ = [
    "AssemblyError",
    "ClosedAnswer",
    "ConfigurationError",
    "DomainError",
    "FormalSum",
    "InternalConsistencyError",
    "LevelParam",
    "MinsingError",
    "Reduced",
    "RootSystem",
    "SearchExhaustedError",
    "SingularReport",
    "VerificationOutcome",
    "Weight",
    "antisymmetric_part",
    "assemble",
    "build_root_system",
    "closed_form_type_a",
    "closed_form_type_d",
    "closed_form_type_e",
    "closed_minimum",
    "cross_check",
    "default_max_depth",
    "descent_with_steps",
    "factor_pairs",
    "first_nonzero_layer",
    "height",
    "integrable_minimum",
    "layer_cost",
    "layer_sum",
    "min_layer_cost",
    "pair_layer",
    "parity_min_cost",
    "reduce_auto",
    "reduce_shifted",
    "reduce_sorted_type_a",
    "reduce_sorted_type_d",
    "report_for",
    "report_from_record",
    "report_to_record",
    "roots_of_height",
    "simple_root_coefficients",
    "type_a_prefix_coefficients",
]
