"""Rank-3 lines glued from two rank-2 atoms."""

import logging
import time
from typing import Iterator, List, Optional, Sequence

from ..config import DEFAULT_BOUNDS, Bounds, config
from ..diagram import DynkinDiagram, format_diagram, reverse
from ..ranktwo import Atom, enumerate_closure_atoms, enumerate_rank2_atoms
from ..scalar import ONE, UnityRoot, gf_domain
from .judge import judge
from .parallel import run_partitioned, worker_state
from .report import SurvivorReport

logger = logging.getLogger(__name__)


def oriented_atoms(atoms: Sequence[Atom]) -> List[Atom]:
    """Each atom in both orientations, one copy per distinct triple, sorted."""
    found = {}
    for atom in atoms:
        for oriented in (atom, atom.reversed()):
            found.setdefault(oriented.triple, oriented)
    return [found[t] for t in sorted(found)]


def glue_line(a: Atom, b: Atom) -> DynkinDiagram:
    """(v1, e12, v2) + (v2, e23, v3); the shared label must agree exactly."""
    v1, e12, v2 = a.triple
    w2, e23, v3 = b.triple
    assert v2 == w2, "atoms do not share the middle vertex"
    return DynkinDiagram((v1, v2, v3), (e12, ONE, e23))


def line_candidates(leading: Atom, by_v1: dict) -> Iterator[DynkinDiagram]:
    """Lines starting with ``leading``, one per reversal class."""
    for b in by_v1.get(leading.triple[2], ()):
        d = glue_line(leading, b)
        if format_diagram(d) <= format_diagram(reverse(d)):
            yield d


def _line_worker(index: int) -> SurvivorReport:
    state = worker_state()
    report = SurvivorReport("line")
    for d in line_candidates(state["atoms"][index], state["by_v1"]):
        report.record(judge(
            d, state["oracle"], state["bounds"],
            reflection_depth=state["reflection_depth"],
        ))
    return report


def candidate_bounds(bounds: Bounds) -> Bounds:
    """Per-candidate exploration is capped by harness_max_nodes."""
    return bounds.replace(max_nodes=min(bounds.max_nodes, config.harness.harness_max_nodes))


def load_atoms(
    domain: Sequence[UnityRoot], atom_source: str, bounds: Bounds, jobs: int
) -> List[Atom]:
    if atom_source == "closure":
        return enumerate_closure_atoms(domain, bounds, jobs=jobs)
    return enumerate_rank2_atoms(domain)


def enumerate_lines(
    domain: Optional[Sequence[UnityRoot]] = None,
    atoms: Optional[Sequence[Atom]] = None,
    jobs: Optional[int] = None,
    mode: Optional[str] = None,
    bounds: Optional[Bounds] = None,
    atom_source: Optional[str] = None,
    reflection_depth: Optional[int] = None,
) -> SurvivorReport:
    """
    Glue every pair of atoms sharing a middle vertex and judge each line.

    Args:
        domain: Parameter values for parametric rows (default G_f)
        atoms: Precomputed atoms (overrides domain and atom_source)
        jobs: Worker processes
        mode: Membership mode
        bounds: Oracle bounds; candidates use max_nodes = harness_max_nodes
        atom_source: table | closure
        reflection_depth: Criteria depth (None: every explored node)
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
        "line", _line_worker, oriented, mode,
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
        "lines: %d candidates, %d killed, %d in list, %d survivors",
        report.total_candidates, report.total_killed, report.in_list, len(report.survivors),
    )
    return report
