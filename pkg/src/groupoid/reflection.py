"""
Reflections ρ_i of diagrams and the linear maps s_i on degree vectors.

ρ_i acts on the standard representative q (q_ij = q̃_ij for i < j, q_ji = 1):
    t_jk = q_jk · q_ik^{-c_ij} · q_ji^{-c_ik} · q_ii^{c_ij c_ik},   c_ii = 2,
and s_i(α_j) = α_j - c_ij α_i.
"""

from functools import lru_cache
from typing import Sequence, Tuple, Union

from ..cartan import Blocked, cartan_row
from ..diagram import BraidingMatrix, DynkinDiagram, standard_rep, to_diagram


@lru_cache(maxsize=1 << 16)
def reflect(d: DynkinDiagram, i: int) -> Union[DynkinDiagram, Blocked]:
    """ρ_i(d), or Blocked when c_i· does not exist."""
    row = cartan_row(d, i)
    if isinstance(row, Blocked):
        return row
    q = standard_rep(d)
    rank = d.rank
    qii = q[i, i]
    entries = []
    for j in range(rank):
        out = []
        for k in range(rank):
            value = q[j, k] * q[i, k] ** (-row[j]) * q[j, i] ** (-row[k]) * qii ** (row[j] * row[k])
            out.append(value)
        entries.append(tuple(out))
    return to_diagram(BraidingMatrix(tuple(entries)))


def s_map(row: Sequence[int], i: int, v: Sequence[int]) -> Tuple[int, ...]:
    """s_i(v) = v - (Σ_j c_ij v_j)·α_i for the Cartan row c_i·."""
    pairing = sum(c * x for c, x in zip(row, v))
    if pairing == 0:
        return tuple(v)
    out = list(v)
    out[i] -= pairing
    return tuple(out)


def s_matrix(row: Sequence[int], i: int):
    """Integer matrix of s_i (columns are images of simple roots)."""
    from sympy import eye
    m = eye(len(row))
    for j, c in enumerate(row):
        m[i, j] -= c
    return m
