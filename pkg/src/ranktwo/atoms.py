"""Rank-2 gluing atoms for the enumeration harness."""

import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import Bounds, DEFAULT_BOUNDS
from ..diagram import DynkinDiagram
from ..groupoid import Outcome, finiteness
from ..scalar import UnityRoot
from .table import Rank2Table, Triple, as_triple, load_rank2_table, rank2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Atom:
    """A connected rank-2 diagram in the list, with the row it came from."""
    diagram: DynkinDiagram
    source: str

    @property
    def triple(self) -> Triple:
        return as_triple(self.diagram)

    def reversed(self) -> "Atom":
        v1, e, v2 = self.triple
        return Atom(rank2(v2, e, v1), self.source)


def _canonical(triple: Triple) -> Triple:
    v1, e, v2 = triple
    return min(triple, (v2, e, v1))


def _collect(found: Dict[Triple, str], triple: Triple, source: str) -> None:
    if triple[1].is_one():
        return
    found.setdefault(_canonical(triple), source)


def _atoms(found: Dict[Triple, str]) -> List[Atom]:
    return [Atom(rank2(*triple), found[triple]) for triple in sorted(found)]


def enumerate_rank2_atoms(
    domain: Sequence[UnityRoot], table: Optional[Rank2Table] = None
) -> List[Atom]:
    """
    Finite rows plus every parametric row evaluated over ``domain``.

    One atom per unordered triple (oriented so that (v1, e, v2) <= (v2, e, v1)),
    sorted, so the list is identical across runs.
    """
    table = table or load_rank2_table()
    found: Dict[Triple, str] = {}
    for triple, ids in sorted(table.finite.items()):
        _collect(found, triple, ids[0])
    for row in table.parametric_rows:
        for triple, _, _ in row.instances(list(domain)):
            _collect(found, triple, row.id)
    logger.info("%d rank-2 atoms from the table over %d parameters", len(found), len(domain))
    return _atoms(found)


def _closure_slice(args: Tuple[UnityRoot, Tuple[UnityRoot, ...], Bounds]) -> List[Triple]:
    v1, domain, bounds = args
    triples = []
    for v2 in domain:
        if v2 < v1:
            continue
        for e in domain:
            if e.is_one():
                continue
            if finiteness(rank2(v1, e, v2), bounds).outcome is Outcome.FINITE_ROOTS:
                triples.append((v1, e, v2))
    return triples


def enumerate_closure_atoms(
    domain: Sequence[UnityRoot], bounds: Bounds = None, jobs: int = 1
) -> List[Atom]:
    """Every connected (v1, e, v2) over ``domain`` whose rank-2 closure is finite."""
    bounds = bounds or DEFAULT_BOUNDS
    values = tuple(sorted(set(domain)))
    tasks = [(v1, values, bounds) for v1 in values]
    if jobs > 1:
        with Pool(jobs) as pool:
            slices = pool.map(_closure_slice, tasks)
    else:
        slices = [_closure_slice(task) for task in tasks]

    found: Dict[Triple, str] = {}
    for triples in slices:
        for triple in triples:
            _collect(found, triple, "closure")
    logger.info("%d rank-2 atoms by closure over %d parameters", len(found), len(values))
    return _atoms(found)
