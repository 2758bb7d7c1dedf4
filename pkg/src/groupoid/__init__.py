"""Reflections, basic data, real roots and infiniteness rules."""

from .verdict import (
    Outcome,
    Verdict,
    Certificate,
    BlockedReflection,
    StandardAffine,
    StandardIndefiniteIsotropic,
    CriterionWitness,
    SixPointGroupoid,
    RankTwoSubdiagram,
    RankThreeSubdiagram,
    RootGrowth,
)
from .reflection import reflect, s_map, s_matrix
from .datum import (
    BasicDatum,
    Complete,
    BlockedAt,
    BoundExceeded,
    explore,
    transport_roots,
    to_dot,
    to_json,
)
from .growth import find_root_growth, has_infinite_order, word_matrix, growth_witness, orbit_sizes
from .standard import standard_verdict, weyl_real_roots
from .sixpoint import six_point_rule, six_point_diagrams, six_point_table
from .finiteness import finiteness, datum_verdict

__all__ = [
    "Outcome",
    "Verdict",
    "Certificate",
    "BlockedReflection",
    "StandardAffine",
    "StandardIndefiniteIsotropic",
    "CriterionWitness",
    "SixPointGroupoid",
    "RankTwoSubdiagram",
    "RankThreeSubdiagram",
    "RootGrowth",
    "reflect",
    "s_map",
    "s_matrix",
    "BasicDatum",
    "Complete",
    "BlockedAt",
    "BoundExceeded",
    "explore",
    "transport_roots",
    "to_dot",
    "to_json",
    "find_root_growth",
    "has_infinite_order",
    "word_matrix",
    "growth_witness",
    "orbit_sizes",
    "standard_verdict",
    "weyl_real_roots",
    "six_point_rule",
    "six_point_diagrams",
    "six_point_table",
    "finiteness",
    "datum_verdict",
]
