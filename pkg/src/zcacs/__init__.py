"""Optimal complementary array code sets: construction and exhaustive verification."""

from zcacs.errors import (
    CodesetFormatError,
    ConfigError,
    RangeError,
    ShapeError,
    ZcacsError,
)
from zcacs.mixed_radix import (
    DigitVector,
    RadixBlock,
    RadixSpec,
    compose,
    decompose,
    successor_digits,
)
from zcacs.generator import (
    KIND_CCC,
    KIND_ZCACS,
    KIND_ZCCS,
    CodeSet,
    CodeSetParams,
    ConstructionParams,
    CosetIndex,
    GeneratorConfig,
    PhaseArray,
    ThetaIndex,
    TIndex,
    build_ccc,
    build_codeset,
    build_zcacs,
    construction_kind,
    coset_indices,
    derive_params,
    eval_a,
    eval_b,
    eval_f,
    eval_m,
    materialize_array,
    random_choices,
    reduce_to_1d,
    theta_indices,
)
from zcacs.correlation import (
    CorrelationValue,
    OptimalityResult,
    VerificationReport,
    Violation,
    accf_1d,
    accf_2d,
    optimality,
    root_sum,
    set_correlation,
    verify_ccc,
    verify_zcacs,
)
from zcacs.formats import (
    config_to_document,
    load_codeset,
    load_config,
    parse_config_document,
    report_to_text,
    write_codeset,
)

__version__ = "0.1.0"
