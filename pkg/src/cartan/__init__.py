"""Cartan integers, generalized Cartan matrices and their classification."""

from .matrix import GCM, parse_gcm, format_gcm
from .classify import GCMType, GCMClass, ComponentClass, gcm_class, determinant
from .series import (
    finite_cartan,
    affine_cartan,
    finite_table,
    untwisted_affine_table,
    twisted_affine_table,
    affine_type_name,
)
from .entries import (
    Blocked,
    BlockedReason,
    cartan_entry,
    cartan_row,
    cartan_matrix,
    is_cartan_type,
    is_standard,
)
from .consistency import (
    NoBraiding,
    ForcedOrder,
    Family,
    CartanSolution,
    constraint_matrix,
    cartan_consistency,
    cartan_braiding,
    braiding_from_labels,
)
from .census import compact_hyperbolic_census, coxeter_signature, FINITE_PAIRS

__all__ = [
    "GCM",
    "parse_gcm",
    "format_gcm",
    "GCMType",
    "GCMClass",
    "ComponentClass",
    "gcm_class",
    "determinant",
    "finite_cartan",
    "affine_cartan",
    "finite_table",
    "untwisted_affine_table",
    "twisted_affine_table",
    "affine_type_name",
    "Blocked",
    "BlockedReason",
    "cartan_entry",
    "cartan_row",
    "cartan_matrix",
    "is_cartan_type",
    "is_standard",
    "NoBraiding",
    "ForcedOrder",
    "Family",
    "CartanSolution",
    "constraint_matrix",
    "cartan_consistency",
    "cartan_braiding",
    "braiding_from_labels",
    "compact_hyperbolic_census",
    "coxeter_signature",
    "FINITE_PAIRS",
]
