"""
Root-growth certificates for infinite real-root sets.

A closed word w at node 0 of the datum composes to an integer matrix M that
maps real roots at node 0 to real roots at node 0. If M has infinite order,
the orbit of some simple root under M is unbounded, so there are infinitely
many real roots. Finite order is decided exactly: every irreducible factor of
the characteristic polynomial must be cyclotomic and the product of the
distinct factors must annihilate M.
"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from sympy import Matrix, Poly, eye, factor_list, symbols

from ..cartan import cartan_row
from ..config import Bounds, DEFAULT_BOUNDS
from .datum import BasicDatum
from .reflection import s_matrix
from .verdict import RootGrowth

logger = logging.getLogger(__name__)

_x = symbols("x")


def word_matrix(datum: BasicDatum, word: Tuple[int, ...], start: int = 0) -> Optional[Matrix]:
    """
    Compose s-maps along ``word`` from node ``start``.

    Returns:
        The matrix, or None if the word leaves the explored graph or does not
        return to ``start``
    """
    m = eye(datum.rank)
    x = start
    for label in word:
        m = m * s_matrix(cartan_row(datum.nodes[x], label), label)
        y = datum.edges.get((x, label))
        if y is None:
            return None
        x = y
    return m if x == start else None


def has_infinite_order(m: Matrix) -> bool:
    poly = m.charpoly(_x).as_expr()
    _, factors = factor_list(poly, _x)
    distinct = []
    for factor, _multiplicity in factors:
        p = Poly(factor, _x)
        if not p.is_cyclotomic:
            return True
        distinct.append(p)
    # minimal polynomial squarefree <=> product of distinct factors kills m
    value = eye(m.rows)
    for p in distinct:
        value = value * _evaluate(p, m)
    return not value.is_zero_matrix


def _evaluate(p: Poly, m: Matrix) -> Matrix:
    result = Matrix.zeros(m.rows, m.cols)
    for coefficient in p.all_coeffs():
        result = result * m + coefficient * eye(m.rows)
    return result


def _fundamental_words(datum: BasicDatum) -> Iterator[Tuple[int, ...]]:
    """One closed word per non-tree edge (loops included)."""
    for x, i, y in datum.edge_list():
        if datum.parent[y] == (x, i) or datum.parent[x] == (y, i):
            continue
        yield datum.path_to(x) + (i,) + tuple(reversed(datum.path_to(y)))


def orbit_sizes(m: Matrix, gamma: Tuple[int, ...], steps: int) -> Tuple[int, ...]:
    v = Matrix(gamma)
    sizes = []
    for _ in range(steps):
        sizes.append(int(max(abs(c) for c in v)))
        v = m * v
    return tuple(sizes)


def growth_witness(m: Matrix, rank: int, steps: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Simple root whose M-orbit grows the most, with its size sequence."""
    best = None
    for j in range(rank):
        gamma = tuple(1 if k == j else 0 for k in range(rank))
        sizes = orbit_sizes(m, gamma, steps)
        if best is None or sizes[-1] > best[1][-1]:
            best = (gamma, sizes)
    return best


def find_root_growth(datum: BasicDatum, bounds: Bounds = None) -> Optional[RootGrowth]:
    """
    Search closed words for an s-map of infinite order.

    Tries fundamental cycles first, then products of two and of three of
    them, up to ``bounds.growth_word_limit`` order tests.
    """
    bounds = bounds or DEFAULT_BOUNDS
    generators: List[Tuple[Tuple[int, ...], Matrix]] = []
    seen = set()
    for word in _fundamental_words(datum):
        m = word_matrix(datum, word)
        if m is None:
            continue
        key = tuple(m)
        if key in seen:
            continue
        seen.add(key)
        generators.append((word, m))

    def candidates():
        for item in generators:
            yield item
        for size in (2, 3):
            for combo in combinations(generators, size):
                word = sum((w for w, _ in combo), ())
                m = eye(datum.rank)
                for _, g in combo:
                    m = m * g
                yield word, m

    tested = 0
    for word, m in candidates():
        if tested >= bounds.growth_word_limit:
            break
        tested += 1
        if has_infinite_order(m):
            gamma, sizes = growth_witness(m, datum.rank, bounds.growth_iterations)
            logger.debug("root growth: word %s after %d tests", word, tested)
            return RootGrowth(word=word, gamma=gamma, sizes=sizes)
    logger.debug("no root growth found in %d tests (%d generators)", tested, len(generators))
    return None
