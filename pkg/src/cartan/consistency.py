"""
Which braidings of Cartan type can have a given GCM.

Write q_ii = e^{2πi a_i}. Cartan type forces q̃_ij = q_ii^{c_ij} = q_jj^{c_ji},
i.e. c_ij a_i ≡ c_ji a_j (mod 1) for every edge. The solution group of this
integer system decides everything: a positive-dimensional kernel gives a
one-parameter family (the GCM is symmetrizable), otherwise the group is finite
and is enumerated from its exponent (largest invariant factor).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, ilcm
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from ..config import DEFAULT_BOUNDS
from ..diagram import DynkinDiagram, edge_pairs
from ..errors import ConfigurationError, InvalidArgument, OrderTooSmall
from ..scalar import UnityRoot, make
from .entries import Blocked, cartan_matrix
from .matrix import GCM

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoBraiding:
    """Every solution forces some q_ii = 1 or too small an order."""
    group_order: int
    kind: str = field(default="no_braiding", init=False)

    def describe(self) -> str:
        return f"NoBraiding (|S| = {self.group_order})"


@dataclass(frozen=True)
class ForcedOrder:
    """
    Realisable braidings exist only for finitely many exponent vectors.

    Attributes:
        order: Largest order of a realising vector (order of q in the tables)
        orders: All orders that occur among realising vectors
        witness: Vertex labels q_ii of one vector of the largest order
    """
    order: int
    orders: Tuple[int, ...]
    witness: Tuple[UnityRoot, ...]
    kind: str = field(default="forced_order", init=False)

    def describe(self) -> str:
        return f"ForcedOrder({self.order})"


@dataclass(frozen=True)
class Family:
    """A one-parameter (or larger) family; generators are symmetrizing weights."""
    generators: Tuple[Tuple[int, ...], ...]
    kind: str = field(default="family", init=False)

    def describe(self) -> str:
        return f"Family(weights={list(self.generators)})"


CartanSolution = Union[NoBraiding, ForcedOrder, Family]


def constraint_matrix(c: GCM) -> List[List[int]]:
    """One row c_ij·e_i - c_ji·e_j per edge i < j."""
    rows = []
    for i, j in edge_pairs(c.rank):
        if c[i, j] != 0:
            row = [0] * c.rank
            row[i] = c[i, j]
            row[j] = -c[j, i]
            rows.append(row)
    return rows


def _primitive_integer(vector) -> Tuple[int, ...]:
    denominators = [x.q for x in vector]
    scale = reduce(ilcm, denominators, 1)
    ints = [int(x * scale) for x in vector]
    g = reduce(gcd, (abs(x) for x in ints), 0) or 1
    ints = [x // g for x in ints]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    return tuple(ints)


def _realises(c: GCM, orders: Sequence[int]) -> bool:
    for i in range(c.rank):
        needed = 1 + max((-c[i, j] for j in range(c.rank) if j != i), default=0)
        if orders[i] < max(needed, 2):
            return False
    return True


def cartan_consistency(c: GCM, enumeration_cap: int = None) -> CartanSolution:
    """
    Solve c_ij a_i ≡ c_ji a_j (mod 1) and decide realisability.

    Args:
        c: Generalized Cartan matrix
        enumeration_cap: Largest E^θ grid enumerated in the finite case

    Returns:
        NoBraiding, ForcedOrder or Family
    """
    rows = constraint_matrix(c)
    rank = c.rank
    if not rows or Matrix(rows).rank() < rank:
        kernel = Matrix(rows).nullspace() if rows else [Matrix.eye(rank)[:, k] for k in range(rank)]
        return Family(tuple(_primitive_integer(list(v)) for v in kernel))

    factors = [int(x) for x in invariant_factors(Matrix(rows), domain=ZZ) if x != 0]
    group_order = reduce(lambda a, b: a * b, factors, 1)
    exponent = max(factors)

    cap = enumeration_cap or DEFAULT_BOUNDS.consistency_enumeration_cap
    if exponent ** rank > cap:
        raise ConfigurationError(
            f"solution grid {exponent}^{rank} exceeds consistency_enumeration_cap={cap}"
        )

    grid = np.indices((exponent,) * rank).reshape(rank, -1).T
    residues = (grid @ np.array(rows, dtype=np.int64).T) % exponent
    solutions = grid[(residues == 0).all(axis=1)]

    best = None
    orders_seen = set()
    for vector in solutions:
        if not all(vector):
            continue
        orders = [exponent // gcd(int(k), exponent) for k in vector]
        if not _realises(c, orders):
            continue
        total = reduce(lambda a, b: a * b // gcd(a, b), orders, 1)
        orders_seen.add(total)
        if best is None or total > best[0]:
            best = (total, tuple(make(int(k), exponent) for k in vector))

    logger.debug("consistency %s: |S|=%d, exponent=%d, realising orders %s",
                 c, group_order, exponent, sorted(orders_seen))
    if best is None:
        return NoBraiding(group_order)
    return ForcedOrder(best[0], tuple(sorted(orders_seen)), best[1])


def braiding_from_labels(c: GCM, labels: Sequence[UnityRoot]) -> DynkinDiagram:
    """Cartan-type diagram with q_ii = labels[i] and q̃_ij = q_ii^{c_ij}."""
    edges = []
    for i, j in edge_pairs(c.rank):
        left, right = labels[i] ** c[i, j], labels[j] ** c[j, i]
        if left != right:
            raise InvalidArgument(
                f"labels do not satisfy q_ii^c_ij = q_jj^c_ji at ({i + 1}, {j + 1})"
            )
        edges.append(left)
    d = DynkinDiagram(tuple(labels), tuple(edges))
    _validate(c, d)
    return d


def cartan_braiding(c: GCM, q: UnityRoot, weights: Sequence[int]) -> DynkinDiagram:
    """
    Braiding q_ii = q^{d_i}, q̃_ij = q^{d_i c_ij} for a symmetrizable GCM.

    Raises:
        InvalidArgument: weights do not symmetrize c, or q = 1
        OrderTooSmall: the recomputed Cartan matrix differs from c
    """
    if len(weights) != c.rank:
        raise InvalidArgument(f"need {c.rank} weights, got {len(weights)}")
    if q.is_one():
        raise InvalidArgument("q must differ from 1")
    for i, j in edge_pairs(c.rank):
        if weights[i] * c[i, j] != weights[j] * c[j, i]:
            raise InvalidArgument(f"weights {list(weights)} do not symmetrize c at ({i + 1}, {j + 1})")
    d = DynkinDiagram(
        tuple(q ** w for w in weights),
        tuple(q ** (weights[i] * c[i, j]) for i, j in edge_pairs(c.rank)),
    )
    _validate(c, d)
    return d


def _validate(c: GCM, d: DynkinDiagram) -> None:
    recomputed = cartan_matrix(d)
    if isinstance(recomputed, Blocked):
        i, j = recomputed.vertex, recomputed.partner
        raise OrderTooSmall((i, j), c[i, j], None)
    for i in range(c.rank):
        for j in range(c.rank):
            if recomputed[i, j] != c[i, j]:
                raise OrderTooSmall((i, j), c[i, j], recomputed[i, j])
