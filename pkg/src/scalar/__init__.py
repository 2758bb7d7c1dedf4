"""Exact roots of unity, q-number predicates and parameter domains."""

from .unity import (
    UnityRoot,
    ONE,
    MINUS_ONE,
    make,
    order,
    is_primitive,
    qnum_is_zero,
    parse_scalar,
    format_scalar,
)
from .domains import (
    primitive_roots,
    roots_of_order_dividing,
    divisor_closure,
    domain_from_orders,
    gf_orders,
    gf_domain,
    gf_size,
    order_domain,
)

__all__ = [
    "UnityRoot",
    "ONE",
    "MINUS_ONE",
    "make",
    "order",
    "is_primitive",
    "qnum_is_zero",
    "parse_scalar",
    "format_scalar",
    "primitive_roots",
    "roots_of_order_dividing",
    "divisor_closure",
    "domain_from_orders",
    "gf_orders",
    "gf_domain",
    "gf_size",
    "order_domain",
]
