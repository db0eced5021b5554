"""Exact Duflo-Serganova functor computations on Lie superalgebra modules."""

from ._dslab import (
    Algebra,
    DSResult,
    DslabError,
    OddElem,
    Rep,
    Report,
    adjoint,
    algebra,
    algebra_from_json,
    berezinian,
    cli,
    direct_sum,
    ds,
    ds_from_json,
    dual,
    gu_sdim,
    kac_module,
    les_check,
    natural,
    odd,
    parity_shift,
    run_suite,
    standard,
    suite_names,
    tensor,
    tensor_iso_check,
    trivial,
    verify_dualpair,
    verify_kac_freeness,
    verify_p_prop,
    verify_q_prop,
    verify_spherical,
    verify_split,
    verify_thm3,
)

__version__ = "0.1.0"
