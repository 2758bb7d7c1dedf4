"""Semi-decision of real-root finiteness."""

import logging

from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram, format_diagram
from .datum import BasicDatum, BlockedAt, BoundExceeded, explore
from .growth import find_root_growth
from .verdict import BlockedReflection, Outcome, Verdict

logger = logging.getLogger(__name__)


def finiteness(d: DynkinDiagram, bounds: Bounds = None) -> Verdict:
    """
    Explore d and decide whether its real roots are finite.

    FiniteRoots certifies only the real-root closure, not list membership.
    A blocked reflection anywhere gives InfiniteGK; a bounds hit gives
    InfiniteGK when a root-growth certificate is found, else Unknown.
    """
    bounds = bounds or DEFAULT_BOUNDS
    datum = explore(d, bounds, with_roots=True)
    verdict = datum_verdict(datum)
    if verdict.outcome is not Outcome.UNKNOWN:
        return verdict

    certificate = find_root_growth(datum, bounds)
    if certificate is not None:
        return Verdict.infinite(certificate, note=verdict.note)
    logger.debug("finiteness undecided for %s: %s", format_diagram(d), verdict.note)
    return verdict


def datum_verdict(datum: BasicDatum) -> Verdict:
    """Blocked, FiniteRoots or Unknown, read off an explored datum without further search."""
    if isinstance(datum.status, BlockedAt):
        status = datum.status
        return Verdict.infinite(BlockedReflection(
            node=format_diagram(datum.nodes[status.node]),
            vertex=status.vertex,
            path=datum.path_to(status.node),
            reason=status.reason,
        ))

    if datum.is_complete:
        roots = {
            format_diagram(node): tuple(sorted(datum.roots[x]))
            for x, node in enumerate(datum.nodes)
        }
        return Verdict(Outcome.FINITE_ROOTS, roots=roots, note=f"{len(datum.nodes)} nodes")

    assert isinstance(datum.status, BoundExceeded)
    return Verdict.unknown(datum.status.describe())
