"""Frobenius-Schur indicators of pq-dimensional pointed Hopf algebras."""

from ._pqhopf import (
    AnalysisError,
    CatalogError,
    FieldError,
    HopfAlgebra,
    HopfError,
    IntegralError,
    build,
    chi,
    construct,
    corollary_sum,
    dual,
    field_modulus,
    from_json,
    indicators,
    primitive_qth_root,
    required_degree,
    tensor,
    verify_lemma_part1,
    verify_lemma_part2,
    verify_main_theorem,
    verify_properties,
    verify_xi_independence,
)

__all__ = [
    "AnalysisError",
    "CatalogError",
    "FieldError",
    "HopfAlgebra",
    "HopfError",
    "IntegralError",
    "build",
    "chi",
    "construct",
    "corollary_sum",
    "dual",
    "field_modulus",
    "from_json",
    "indicators",
    "primitive_qth_root",
    "required_degree",
    "tensor",
    "verify_lemma_part1",
    "verify_lemma_part2",
    "verify_main_theorem",
    "verify_properties",
    "verify_xi_independence",
]
