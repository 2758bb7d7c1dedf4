"""Rank-3 triangles glued from three rank-2 atoms."""

import logging
import time
from typing import Iterator, Optional, Sequence

from ..config import DEFAULT_BOUNDS, Bounds, config
from ..diagram import DynkinDiagram, canonical_key, format_diagram
from ..ranktwo import Atom
from ..scalar import UnityRoot, gf_domain
from .judge import judge
from .lines import candidate_bounds, load_atoms, oriented_atoms
from .parallel import run_partitioned, worker_state
from .report import CandidateOutcome, SurvivorReport
from .sa1 import is_all_sa1, sa1_triangle_rule

logger = logging.getLogger(__name__)


def glue_triangle(a: Atom, b: Atom, c: Atom) -> DynkinDiagram:
    """a = (v1, e12, v2), b = (v2, e23, v3), c = (v3, e13, v1)."""
    v1, e12, v2 = a.triple
    _, e23, v3 = b.triple
    _, e13, _ = c.triple
    return DynkinDiagram((v1, v2, v3), (e12, e13, e23))


def triangle_candidates(leading: Atom, by_v1: dict) -> Iterator[DynkinDiagram]:
    """Triangles starting with ``leading``, one per vertex-permutation class."""
    v1, _, v2 = leading.triple
    for b in by_v1.get(v2, ()):
        for c in by_v1.get(b.triple[2], ()):
            if c.triple[2] != v1:
                continue
            d = glue_triangle(leading, b, c)
            if format_diagram(d) == canonical_key(d):
                yield d


def _triangle_worker(index: int) -> SurvivorReport:
    state = worker_state()
    report = SurvivorReport("triangle")
    for d in triangle_candidates(state["atoms"][index], state["by_v1"]):
        if is_all_sa1(d) and sa1_triangle_rule(d.edge(0, 2), d.edge(1, 2), d.edge(0, 1)):
            report.record(CandidateOutcome(format_diagram(d), "deferred", "qrs = 1"))
            continue
        report.record(judge(
            d, state["oracle"], state["bounds"],
            defer_lines=True, reflection_depth=state["reflection_depth"],
        ))
    return report


def enumerate_triangles(
    domain: Optional[Sequence[UnityRoot]] = None,
    atoms: Optional[Sequence[Atom]] = None,
    jobs: Optional[int] = None,
    mode: Optional[str] = None,
    bounds: Optional[Bounds] = None,
    atom_source: Optional[str] = None,
    reflection_depth: Optional[int] = None,
) -> SurvivorReport:
    """
    Glue atoms around a 3-cycle and judge each triangle.

    Triangles whose basic datum contains a line are deferred to line results;
    those with three -1 vertices and qrs = 1 are deferred without exploring.
    Arguments as for ``enumerate_lines``.
    """
    started = time.perf_counter()
    domain = list(domain) if domain is not None else gf_domain(config.ranktwo.gf_generators)
    jobs = jobs or config.harness.jobs
    mode = mode or config.ranktwo.membership_mode
    bounds = bounds or DEFAULT_BOUNDS
    atom_source = atom_source or config.ranktwo.atom_source
    given = atoms is not None
    if atoms is None:
        atoms = load_atoms(domain, atom_source, bounds, jobs)

    oriented = oriented_atoms(atoms)
    report = run_partitioned(
        "triangle", _triangle_worker, oriented, mode,
        oracle_bounds=bounds,
        bounds=candidate_bounds(bounds),
        jobs=jobs,
        chunk_size=config.harness.chunk_size,
        reflection_depth=reflection_depth,
    )
    report.runtime = {
        "seconds": round(time.perf_counter() - started, 2),
        "jobs": jobs,
        "atoms": len(atoms),
        "membership_mode": mode,
        "atom_source": "given" if given else atom_source,
    }
    logger.info(
        "triangles: %d candidates, %d killed, %d in list, %d deferred, %d survivors",
        report.total_candidates, report.total_killed, report.in_list,
        report.deferred, len(report.survivors),
    )
    return report
