"""Infiniteness rules for data of standard type."""

import logging
from collections import deque
from typing import Iterator, Optional, Tuple, Union

from ..cartan import GCM, Blocked, GCMType, affine_type_name, cartan_matrix, gcm_class, is_standard
from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram, degree_q
from .datum import BasicDatum, explore
from .verdict import StandardAffine, StandardIndefiniteIsotropic, Verdict

logger = logging.getLogger(__name__)

StandardCertificate = Union[StandardAffine, StandardIndefiniteIsotropic]


def weyl_real_roots(c: GCM, max_height: int, max_roots: int) -> Iterator[Tuple[int, ...]]:
    """
    Positive real roots of the Weyl group of c, by increasing height.

    Every positive real root other than a simple one is s_i(β) for a lower
    positive real root β with Σ_j c_ij β_j < 0, so raising from the simple
    roots reaches all of them.
    """
    rank = c.rank
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    count = 0
    while queue and count < max_roots:
        beta = queue.popleft()
        count += 1
        yield beta
        for i in range(rank):
            pairing = sum(c[i, j] * beta[j] for j in range(rank))
            if pairing >= 0:
                continue
            image = list(beta)
            image[i] -= pairing
            image = tuple(image)
            if image not in seen and sum(image) <= max_height:
                seen.add(image)
                queue.append(image)


def standard_verdict(
    d: DynkinDiagram, bounds: Bounds = None, datum: Optional[BasicDatum] = None
) -> Union[StandardCertificate, Verdict, None]:
    """
    Certificate from the standard-type rules, if one applies.

    An incomplete datum gives an Unknown verdict naming the stop reason. A
    complete datum gives None when it is not standard or the GCM is finite
    (or indefinite without an isotropic real root in range).
    """
    bounds = bounds or DEFAULT_BOUNDS
    if datum is None:
        datum = explore(d, bounds, with_roots=False)
    if not datum.graph_complete:
        logger.debug("standard_verdict: datum incomplete (%s)", datum.status.describe())
        return Verdict.unknown(f"standard rules need a complete datum ({datum.status.describe()})")
    if not is_standard(datum):
        return None

    c = cartan_matrix(d)
    if isinstance(c, Blocked):
        return None
    klass = gcm_class(c)
    if klass.kind is GCMType.AFFINE:
        name = affine_type_name(c) if c.is_indecomposable() else None
        return StandardAffine(gcm=str(c), name=name)
    if klass.kind is GCMType.INDEFINITE:
        for gamma in weyl_real_roots(c, bounds.max_root_height, bounds.max_roots):
            if degree_q(d, gamma, gamma)[0].is_one():
                return StandardIndefiniteIsotropic(gcm=str(c), gamma=gamma)
    return None
