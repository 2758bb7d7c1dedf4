"""Finite sets of roots of unity used as parameter domains."""

from typing import Iterable, List, Sequence, Set

from sympy import divisors, totient

from .unity import UnityRoot, make


def primitive_roots(n: int) -> List[UnityRoot]:
    """G'_N in increasing exponent order."""
    return [make(k, n) for k in range(n) if make(k, n).den == n]


def roots_of_order_dividing(n: int) -> List[UnityRoot]:
    """G_N."""
    return sorted({make(k, n) for k in range(n)})


def divisor_closure(generators: Iterable[int]) -> List[int]:
    orders: Set[int] = set()
    for n in generators:
        orders.update(int(d) for d in divisors(n))
    return sorted(orders)


def domain_from_orders(orders: Sequence[int]) -> List[UnityRoot]:
    return sorted(root for n in orders for root in primitive_roots(n))


def gf_orders(generators: Sequence[int] = (14, 18, 20, 24, 30)) -> List[int]:
    return divisor_closure(generators)


def gf_domain(generators: Sequence[int] = (14, 18, 20, 24, 30)) -> List[UnityRoot]:
    """G_f = G_14 ∪ G_18 ∪ G_20 ∪ G_24 ∪ G_30."""
    return domain_from_orders(gf_orders(generators))


def gf_size(generators: Sequence[int] = (14, 18, 20, 24, 30)) -> int:
    return sum(int(totient(n)) for n in gf_orders(generators))


def order_domain(max_order: int) -> List[UnityRoot]:
    """All roots of unity of order at most ``max_order``."""
    return domain_from_orders(range(1, max_order + 1))
