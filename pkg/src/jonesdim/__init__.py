"""Dimension tables for semisimple quotients of symmetric-group, Hecke,
Brauer and BMW algebras, computed by alcove-confined fusion."""

from .root_data import (
    AlcoveParams,
    Family,
    RootSystemSpec,
    SignedAlcovePoint,
    Weight,
    alcove_contains,
    alcove_weights,
    dim_vector_rep,
    is_dominant,
    make_root_system,
    reflect_to_alcove,
    weyl_dim,
)
from .branching import (
    delta_mults,
    fusion_step,
    fusion_mults,
    fusion_mults_altsum,
    minuscule_walk_mults,
)
from .jones_algebras import (
    AlgebraConfig,
    DimensionRow,
    algebra_decomposition,
    bmw_simple_dims,
    brauer_simple_dims,
    delta_from_rank,
    hecke_simple_dims,
    is_e_regular,
    rank_from_delta,
    symmetric_simple_dims,
    weight_set,
)
from .oracle import char_product_decompose, enumerate_paths, transfer_matrix_count

__all__ = [
    "AlcoveParams",
    "AlgebraConfig",
    "DimensionRow",
    "Family",
    "RootSystemSpec",
    "SignedAlcovePoint",
    "Weight",
    "alcove_contains",
    "alcove_weights",
    "algebra_decomposition",
    "bmw_simple_dims",
    "brauer_simple_dims",
    "char_product_decompose",
    "delta_from_rank",
    "delta_mults",
    "dim_vector_rep",
    "enumerate_paths",
    "fusion_mults",
    "fusion_mults_altsum",
    "fusion_step",
    "hecke_simple_dims",
    "is_dominant",
    "is_e_regular",
    "make_root_system",
    "minuscule_walk_mults",
    "rank_from_delta",
    "reflect_to_alcove",
    "symmetric_simple_dims",
    "transfer_matrix_count",
    "weight_set",
    "weyl_dim",
]
