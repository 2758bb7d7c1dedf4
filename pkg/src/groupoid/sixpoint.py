"""
The six-point Weyl groupoid.

Its six diagrams (ζ a primitive cube root of 1) form a complete basic datum
with six nodes; the Cartan matrices differ from node to node and the real
roots grow without bound, yet no criterion applies to any node. They are
matched here as a table, together with every vertex permutation and the
Galois twin ζ ↔ ζ² (the twin family is built at ζ², since a label-wise
power fixing -1 and swapping the cube roots has exponent 5 on G_6).
"""

from functools import lru_cache
from typing import FrozenSet, List

from ..diagram import DynkinDiagram, all_permutations
from ..scalar import UnityRoot, make

_Z = make(1, 3)


def _d(v1, v2, v3, e12, e13, e23) -> DynkinDiagram:
    return DynkinDiagram((v1, v2, v3), (e12, e13, e23))


def six_point_diagrams(zeta: UnityRoot = _Z) -> List[DynkinDiagram]:
    """The six diagrams of the groupoid, in the order of its chain."""
    z, z2, one = zeta, zeta ** 2, make(0, 1)
    return [
        _d(-one, z, -z2, -z, one, -z),
        _d(-one, z2, -z2, -z2, one, -z),
        _d(-one, z2, -one, -z2, z, -one),
        _d(z, -one, z, -z, one, z2),
        _d(z, -one, z2, z2, one, -one),
        _d(z, -z2, z2, z2, one, -z),
    ]


@lru_cache(maxsize=1)
def six_point_table() -> FrozenSet[DynkinDiagram]:
    table = set()
    for zeta in (_Z, _Z ** 2):
        for d in six_point_diagrams(zeta):
            table.update(all_permutations(d))
    return frozenset(table)


def six_point_rule(d: DynkinDiagram) -> bool:
    return d.rank == 3 and d in six_point_table()
