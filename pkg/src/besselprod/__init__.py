"""Maclaurin coefficients of h(z)*J_nu(z) and h(z)*I_nu(z) products.

Thirteen auxiliary factors h (exponential, binomial, arctan composite,
trigonometric, hyperbolic, inverse trigonometric) times either Bessel
kind give 26 coefficient families.  Each family's published forward
recurrence is verified in exact Gaussian-rational arithmetic against a
definitional series-convolution oracle; verified recurrences power the
fast generation path, and the few families whose published tables fail
reconciliation are served by the oracle with a flag.
"""

from .core import (
    ALL_FAMILIES,
    CoefficientSequence,
    FamilyId,
    Params,
    RecurrenceSpec,
    make_params,
    validate,
)
from .exactnum import ExactComplex
from .errors import (
    BesselProdError,
    BranchCut,
    CalibrationFailed,
    ExcludedOrder,
    HalfIntegerOrder,
    IndexTooSmall,
    LengthMismatch,
    MissingParam,
    NonzeroConstantTerm,
    OutsideDisc,
    ValidationError,
)
from .oracle import PowerSeries, bessel_core, cauchy_product, h_series, oracle_coeffs, series_exp
from .recurrence import ParityCalibration, betas, calibrate_parity, generate, seeds
from .verify import (
    Reconciliation,
    VerificationReport,
    compare,
    cross_identities,
    default_test_params,
    reconcile,
    verify_all,
)
from .analysis import BenchResult, EvalResult, bench, direct_value, evaluate, safe_radius
from .formats import (
    sequence_from_json,
    sequence_from_json_text,
    sequence_to_csv,
    sequence_to_json,
    sequence_to_json_text,
    sequences_equal,
)
from .gammafn import gamma
from .cli import cli_main

__version__ = "0.1.0"

__all__ = [
    "ALL_FAMILIES",
    "BenchResult",
    "BesselProdError",
    "BranchCut",
    "CalibrationFailed",
    "CoefficientSequence",
    "EvalResult",
    "ExactComplex",
    "ExcludedOrder",
    "FamilyId",
    "HalfIntegerOrder",
    "IndexTooSmall",
    "LengthMismatch",
    "MissingParam",
    "NonzeroConstantTerm",
    "OutsideDisc",
    "ParityCalibration",
    "Params",
    "PowerSeries",
    "Reconciliation",
    "RecurrenceSpec",
    "ValidationError",
    "VerificationReport",
    "bench",
    "bessel_core",
    "betas",
    "calibrate_parity",
    "cauchy_product",
    "cli_main",
    "compare",
    "cross_identities",
    "default_test_params",
    "direct_value",
    "evaluate",
    "gamma",
    "generate",
    "h_series",
    "make_params",
    "oracle_coeffs",
    "reconcile",
    "safe_radius",
    "seeds",
    "sequence_from_json",
    "sequence_from_json_text",
    "sequence_to_csv",
    "sequence_to_json",
    "sequence_to_json_text",
    "sequences_equal",
    "series_exp",
    "validate",
    "verify_all",
]
