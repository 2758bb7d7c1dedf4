"""
Compactly hyperbolic GCMs generated by extending finite ones.

Every proper principal submatrix of a compactly hyperbolic GCM is of finite
type, so every pair (c_ij, c_ji) is one of the rank-2 finite pairs and every
corank-one principal submatrix is a finite GCM. Classes are returned up to
simultaneous permutation of rows and columns.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from ..diagram import edge_pairs
from .classify import GCMType, gcm_class
from .matrix import GCM

logger = logging.getLogger(__name__)

FINITE_PAIRS: Tuple[Tuple[int, int], ...] = (
    (0, 0), (-1, -1), (-1, -2), (-2, -1), (-1, -3), (-3, -1),
)


@lru_cache(maxsize=None)
def _finite_labeled(rank: int) -> Tuple[GCM, ...]:
    """All labeled GCMs of the given rank whose components are all finite."""
    if rank == 1:
        return (GCM(((2,),)),)
    result = []
    for base in _finite_labeled(rank - 1):
        for column in product(FINITE_PAIRS, repeat=rank - 1):
            candidate = _extend(base, column)
            if gcm_class(candidate).is_finite:
                result.append(candidate)
    return tuple(result)


def _extend(base: GCM, column) -> GCM:
    n = base.rank
    rows = [list(row) + [column[i][0]] for i, row in enumerate(base.entries)]
    rows.append([column[i][1] for i in range(n)] + [2])
    return GCM.from_rows(rows)


def compact_hyperbolic_census(rank: int) -> List[GCM]:
    """
    Canonical representatives of all compactly hyperbolic GCMs of a rank.

    Rank 3 gives 31 classes. Cost grows quickly beyond rank 4.
    """
    classes: Dict[Tuple[Tuple[int, ...], ...], GCM] = {}
    for base in _finite_labeled(rank - 1):
        for column in product(FINITE_PAIRS, repeat=rank - 1):
            candidate = _extend(base, column)
            if not candidate.is_indecomposable():
                continue
            klass = gcm_class(candidate)
            if klass.kind is GCMType.INDEFINITE and klass.compactly_hyperbolic:
                canonical = candidate.canonical()
                classes.setdefault(canonical.entries, canonical)
    logger.debug("rank %d: %d compactly hyperbolic classes", rank, len(classes))
    return [classes[key] for key in sorted(classes)]


def coxeter_signature(c: GCM) -> Tuple[int, ...]:
    """
    Sorted Coxeter exponents m_ij of the edges (2 for c_ij = 0, 3, 4, 6 for
    products 1, 2, 3), used to group census classes.
    """
    m = {0: 2, 1: 3, 2: 4, 3: 6}
    return tuple(sorted(m[c[i, j] * c[j, i]] for i, j in edge_pairs(c.rank)))
