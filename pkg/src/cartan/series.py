"""
Classical finite and affine Cartan matrices, generated from their diagrams.

Edges are given as (i, j, c_ij, c_ji) on 0-based vertices. Affine names use
the transposed reading (the name of c is the standard name of c^T), so that
the matrix of a braiding with q_ii^{c_ij} = q̃_ij gets the label used for
Nichols algebras of diagonal type; A_l^(1), A_{2l}^(2) and the simply laced
types are unaffected.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import InvalidArgument
from .matrix import GCM

Edge = Tuple[int, int, int, int]


def from_edges(rank: int, edges: Sequence[Edge]) -> GCM:
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in edges:
        rows[i][j] = cij
        rows[j][i] = cji
    return GCM.from_rows(rows)


def _chain(nodes: Sequence[int]) -> List[Edge]:
    return [(a, b, -1, -1) for a, b in zip(nodes, nodes[1:])]


def finite_cartan(letter: str, n: int) -> GCM:
    """Cartan matrix of the finite type X_n."""
    if letter == "A" and n >= 1:
        return from_edges(n, _chain(range(n)))
    if letter in ("B", "C") and n >= 2:
        edges = _chain(range(n - 1))
        # B_n: short simple root last
        last = (n - 2, n - 1, -1, -2) if letter == "B" else (n - 2, n - 1, -2, -1)
        return from_edges(n, edges + [last])
    if letter == "D" and n >= 4:
        return from_edges(n, _chain(range(n - 1)) + [(n - 3, n - 1, -1, -1)])
    if letter == "E" and n in (6, 7, 8):
        return from_edges(n, _chain([0] + list(range(2, n))) + [(1, 3, -1, -1)])
    if letter == "F" and n == 4:
        return from_edges(4, [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)])
    if letter == "G" and n == 2:
        return from_edges(2, [(0, 1, -1, -3)])
    raise InvalidArgument(f"no finite type {letter}{n}")


def affine_cartan(name: str, l: int) -> GCM:
    """
    Affine Cartan matrix in the standard numbering α0, ..., αl.

    Args:
        name: "A1", "B1", "C1", "D1", "F1", "G1" (untwisted X_l^(1)) or
            "A2even", "A2odd", "D2", "E2", "D3" (twisted families)
        l: Rank of the underlying finite type
    """
    n = l + 1
    if name == "A1":
        if l == 1:
            return from_edges(2, [(0, 1, -2, -2)])
        return from_edges(n, _chain(range(n)) + [(l, 0, -1, -1)])
    if name == "B1" and l >= 3:
        return from_edges(n, [(0, 2, -1, -1)] + _chain(range(1, l)) + [(l - 1, l, -1, -2)])
    if name == "C1" and l >= 2:
        return from_edges(n, [(0, 1, -1, -2)] + _chain(range(1, l)) + [(l - 1, l, -2, -1)])
    if name == "D1" and l >= 4:
        return from_edges(
            n, [(0, 2, -1, -1)] + _chain(range(1, l)) + [(l - 2, l, -1, -1)]
        )
    if name == "F1" and l == 4:
        return from_edges(5, [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)])
    if name == "G1" and l == 2:
        return from_edges(3, [(0, 1, -1, -1), (1, 2, -1, -3)])
    if name == "A2even":
        if l == 1:
            return from_edges(2, [(0, 1, -4, -1)])
        return from_edges(n, [(0, 1, -2, -1)] + _chain(range(1, l)) + [(l - 1, l, -2, -1)])
    if name == "A2odd" and l >= 3:
        return from_edges(n, [(0, 2, -1, -1)] + _chain(range(1, l)) + [(l - 1, l, -2, -1)])
    if name == "D2" and l >= 2:
        return from_edges(n, [(0, 1, -2, -1)] + _chain(range(1, l)) + [(l - 1, l, -1, -2)])
    if name == "E2" and l == 4:
        return from_edges(5, [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)])
    if name == "D3" and l == 2:
        return from_edges(3, [(0, 1, -1, -1), (1, 2, -3, -1)])
    raise InvalidArgument(f"no affine family {name} with l = {l}")


def finite_table(max_rank: int = 5) -> Dict[str, GCM]:
    """Every finite type of rank <= max_rank, keyed by name (e.g. "B3")."""
    table = {}
    for n in range(1, max_rank + 1):
        table[f"A{n}"] = finite_cartan("A", n)
        if n >= 2:
            table[f"B{n}"] = finite_cartan("B", n)
        if n >= 3:
            table[f"C{n}"] = finite_cartan("C", n)
        if n >= 4:
            table[f"D{n}"] = finite_cartan("D", n)
        if n in (6, 7, 8):
            table[f"E{n}"] = finite_cartan("E", n)
    if max_rank >= 2:
        table["G2"] = finite_cartan("G", 2)
    if max_rank >= 4:
        table["F4"] = finite_cartan("F", 4)
    return table


def untwisted_affine_table(max_rank: int = 5) -> Dict[str, GCM]:
    """X_l^(1) with l + 1 <= max_rank."""
    table = {}
    for l in range(1, max_rank):
        table[f"A_{l}^(1)"] = affine_cartan("A1", l)
        if l >= 3:
            table[f"B_{l}^(1)"] = affine_cartan("B1", l)
        if l >= 2:
            table[f"C_{l}^(1)"] = affine_cartan("C1", l)
        if l >= 4:
            table[f"D_{l}^(1)"] = affine_cartan("D1", l)
    if max_rank >= 3:
        table["G_2^(1)"] = affine_cartan("G1", 2)
    if max_rank >= 5:
        table["F_4^(1)"] = affine_cartan("F1", 4)
    return table


def twisted_affine_table(max_rank: int = 5) -> Dict[str, GCM]:
    table = {}
    for l in range(1, max_rank):
        table[f"A_{2 * l}^(2)"] = affine_cartan("A2even", l)
        if l >= 3:
            table[f"A_{2 * l - 1}^(2)"] = affine_cartan("A2odd", l)
        if l >= 2:
            table[f"D_{l + 1}^(2)"] = affine_cartan("D2", l)
    if max_rank >= 3:
        table["D_4^(3)"] = affine_cartan("D3", 2)
    if max_rank >= 5:
        table["E_6^(2)"] = affine_cartan("E2", 4)
    return table


_AFFINE_NAMES: Optional[Dict[Tuple[Tuple[int, ...], ...], str]] = None


def affine_type_name(c: GCM) -> Optional[str]:
    """
    Name of an indecomposable affine GCM up to permutation, or None.

    The lookup is done on c^T (see module docstring).
    """
    global _AFFINE_NAMES
    if _AFFINE_NAMES is None:
        names = {}
        for name, matrix in {**untwisted_affine_table(5), **twisted_affine_table(5)}.items():
            names.setdefault(matrix.canonical().entries, name)
        _AFFINE_NAMES = names
    if c.rank > 5:
        return None
    return _AFFINE_NAMES.get(c.transpose().canonical().entries)
