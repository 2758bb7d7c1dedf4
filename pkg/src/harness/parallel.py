"""
Partitioned candidate evaluation over a process pool.

Tasks are indices of leading atoms; every worker holds the same immutable
atom list and its own membership oracle. Results come back in task order
(``imap``) and are merged by one writer.
"""

import logging
from functools import reduce
from multiprocessing import Pool
from typing import Any, Callable, Dict, List, Optional

from ..config import Bounds
from ..logs import setup_logging
from ..ranktwo import Atom, RankTwoOracle
from .report import SurvivorReport

logger = logging.getLogger(__name__)

_STATE: Dict[str, Any] = {}


def worker_state() -> Dict[str, Any]:
    return _STATE


def _init_worker(
    atoms: List[Atom],
    mode: str,
    oracle_bounds: Bounds,
    bounds: Bounds,
    reflection_depth: Optional[int],
    level: str,
) -> None:
    setup_logging(level)
    by_v1: Dict[Any, List[Atom]] = {}
    for atom in atoms:
        by_v1.setdefault(atom.triple[0], []).append(atom)
    _STATE.clear()
    _STATE.update(
        atoms=atoms,
        by_v1=by_v1,
        oracle=RankTwoOracle(mode=mode, bounds=oracle_bounds),
        bounds=bounds,
        reflection_depth=reflection_depth,
    )


def run_partitioned(
    shape: str,
    worker: Callable[[int], SurvivorReport],
    atoms: List[Atom],
    mode: str,
    oracle_bounds: Bounds,
    bounds: Bounds,
    jobs: int = 1,
    chunk_size: int = 8,
    reflection_depth: Optional[int] = None,
    level: str = "WARNING",
) -> SurvivorReport:
    """
    Evaluate ``worker(i)`` for every leading atom i and merge the reports.

    Args:
        shape: line | triangle
        worker: Module-level function of one atom index
        atoms: Oriented atoms, shared by all workers
        mode: Membership mode for the worker oracles
        oracle_bounds: Bounds for rank-2 closure checks
        bounds: Bounds for candidate exploration
        jobs: Worker processes (1 runs in-process)
        chunk_size: Tasks per pool dispatch
    """
    initargs = (atoms, mode, oracle_bounds, bounds, reflection_depth, level)
    tasks = range(len(atoms))
    empty = SurvivorReport(shape)

    if jobs <= 1:
        _init_worker(*initargs)
        report = reduce(SurvivorReport.merge, map(worker, tasks), empty)
    else:
        logger.info("dispatching %d leading atoms to %d workers", len(atoms), jobs)
        with Pool(processes=jobs, initializer=_init_worker, initargs=initargs) as pool:
            report = reduce(SurvivorReport.merge, pool.imap(worker, tasks, chunksize=chunk_size), empty)
    return report.finalize()
