"""Exact arithmetic for Saito-Kurokawa coefficient tables, local spherical
Bessel values and Maass relations."""

from ._core import (
    ConfigError,
    FormatError,
    IncompleteError,
    LiftSpec,
    QuadExt,
    SphericalParams,
    Table,
    arch_decompose,
    average_coeff,
    b0,
    b0_closed_sk,
    bessel_arch,
    blm_sk,
    chebyshev_u,
    class_count_formula,
    classify,
    coset_invariants,
    detect_asymptotic,
    detect_sk,
    disc_content,
    enumerate_classes,
    fundamental_split,
    generate_table,
    half_power,
    hecke_power,
    is_fundamental_discriminant,
    kronecker_symbol,
    maass_check,
    obstruction,
    reduce,
    s_d,
    series_div,
    siegel_series_value,
    sk_coefficient,
    sk_coefficient_bessel,
    sk_coefficient_dks,
    sk_trace,
    sqrt_q,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "FormatError",
    "IncompleteError",
    "LiftSpec",
    "QuadExt",
    "SphericalParams",
    "Table",
    "arch_decompose",
    "average_coeff",
    "b0",
    "b0_closed_sk",
    "bessel_arch",
    "blm_sk",
    "chebyshev_u",
    "class_count_formula",
    "classify",
    "coset_invariants",
    "detect_asymptotic",
    "detect_sk",
    "disc_content",
    "enumerate_classes",
    "fundamental_split",
    "generate_table",
    "half_power",
    "hecke_power",
    "is_fundamental_discriminant",
    "kronecker_symbol",
    "maass_check",
    "obstruction",
    "reduce",
    "s_d",
    "series_div",
    "siegel_series_value",
    "sk_coefficient",
    "sk_coefficient_bessel",
    "sk_coefficient_dks",
    "sk_trace",
    "sqrt_q",
]
