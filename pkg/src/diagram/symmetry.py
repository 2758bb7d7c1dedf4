"""
Vertex permutations and Galois conjugation of diagrams.

Equality of diagrams is labeled; these helpers exist only to compare sets of
diagrams up to the symmetries a statement allows.
"""

from itertools import permutations
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from ..errors import InvalidArgument
from .dynkin import DynkinDiagram, edge_pairs
from .text import format_diagram


def permute(d: DynkinDiagram, perm: Sequence[int]) -> DynkinDiagram:
    """
    Relabel vertices: new vertex k is old vertex perm[k].

    Args:
        d: Diagram
        perm: A permutation of range(rank)
    """
    if sorted(perm) != list(range(d.rank)):
        raise InvalidArgument(f"not a permutation of {d.rank} vertices: {perm}")
    return DynkinDiagram(
        tuple(d.vertex(p) for p in perm),
        tuple(d.edge(perm[a], perm[b]) for a, b in edge_pairs(d.rank)),
    )


def reverse(d: DynkinDiagram) -> DynkinDiagram:
    return permute(d, list(reversed(range(d.rank))))


def galois(d: DynkinDiagram, k: int) -> DynkinDiagram:
    """Raise every label to the k-th power (an automorphism when gcd(k, orders) = 1)."""
    return DynkinDiagram(
        tuple(q ** k for q in d.vertices),
        tuple(q ** k for q in d.edges),
    )


def galois_conjugates(d: DynkinDiagram) -> List[DynkinDiagram]:
    """All images of d under Gal(Q(ζ_N)/Q), N the lcm of the label orders."""
    n = 1
    for q in d.vertices + d.edges:
        n = n * q.den // gcd(n, q.den)
    return sorted({galois(d, k) for k in range(1, n + 1) if gcd(k, n) == 1}, key=format_diagram)


def all_permutations(d: DynkinDiagram) -> List[DynkinDiagram]:
    return [permute(d, p) for p in permutations(range(d.rank))]


def canonical_key(d: DynkinDiagram, group: Iterable[Sequence[int]] = None) -> str:
    """
    Smallest print of d over a permutation group (default: all of S_θ).
    """
    perms = group if group is not None else permutations(range(d.rank))
    return min(format_diagram(permute(d, p)) for p in perms)


def line_key(d: DynkinDiagram) -> str:
    """Canonical print up to reversal."""
    return min(format_diagram(d), format_diagram(reverse(d)))


def same_up_to(
    found: Iterable[DynkinDiagram],
    expected: Iterable[DynkinDiagram],
    group: Sequence[Sequence[int]] = None,
) -> Tuple[List[str], List[str]]:
    """
    Compare two diagram sets up to a permutation group.

    Returns:
        (missing, unexpected) canonical keys
    """
    group = list(group) if group is not None else None
    found_keys = {canonical_key(d, group) for d in found}
    expected_keys = {canonical_key(d, group) for d in expected}
    return sorted(expected_keys - found_keys), sorted(found_keys - expected_keys)
