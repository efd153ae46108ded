"""Named operators, series transforms, operator fitting and identity checks."""

from .fit import FitResult, fit_operator
from .identities import (
    main_family_build,
    misc_solution,
    misc_third_order,
    p1_hypergeometric_check,
    p1_hypergeometric_params,
    shift_equivalence_check,
    sigma_shift_check,
    sigma_shift_params,
    small_family,
    solution_identity_check,
    twist_check,
    twist_pairs,
    wronskian5_check,
)
from .registry import (
    REGISTRY,
    NamedOperator,
    build_named,
    registry_keys,
    resolve_key,
    tilde_operator,
    tilde_params,
)
from .series_ops import binomial_series, hadamard, hadamard_all, hyp2f1, hyp_series, moebius_pullback

__all__ = [
    "FitResult", "fit_operator", "main_family_build", "misc_solution", "misc_third_order",
    "p1_hypergeometric_check", "p1_hypergeometric_params", "shift_equivalence_check",
    "sigma_shift_check", "sigma_shift_params", "small_family", "solution_identity_check",
    "twist_check", "twist_pairs", "wronskian5_check", "REGISTRY", "NamedOperator",
    "build_named", "registry_keys", "resolve_key", "tilde_operator", "tilde_params",
    "binomial_series", "hadamard", "hadamard_all", "hyp2f1", "hyp_series", "moebius_pullback",
]
