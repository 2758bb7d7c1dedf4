"""
Compactly hyperbolic sweep.

For every row of the compactly hyperbolic asset that carries a matrix: solve
Cartan consistency, compare with the expected outcome, instantiate the
realising braidings and check that each one has infinite GK dimension. When
the row records a printed witness, the rank-2 diagram on its degrees is
compared with the printed one up to symmetry; a mismatch fails the row.

Rows without a matrix are reported unsourced. The generated census is checked
separately: its outcome distribution against the asset's census block, and
each class through the same instance check.
"""

import logging
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..cartan import (
    GCM,
    CartanSolution,
    Family,
    ForcedOrder,
    NoBraiding,
    braiding_from_labels,
    cartan_braiding,
    cartan_consistency,
    compact_hyperbolic_census,
    format_gcm,
)
from ..config import DEFAULT_BOUNDS, Bounds, config
from ..criteria import apply_criteria, classify
from ..diagram import DynkinDiagram, degree_q, format_diagram
from ..errors import ConfigurationError, InvalidArgument, OrderTooSmall, ParseError
from ..io import AssetLoader
from ..ranktwo import RankTwoOracle, ScalarExpr, default_oracle, parse_expr, rank2
from ..scalar import UnityRoot, make
from .expected import symmetry_key
from .lines import candidate_bounds

logger = logging.getLogger(__name__)

ROW_STATUSES = ("pass", "fail", "unsourced", "undecided")


def outcome_key(solution: CartanSolution) -> str:
    """no_braiding | family | forced_order:N"""
    if isinstance(solution, ForcedOrder):
        return f"forced_order:{solution.order}"
    return solution.kind


def expected_key(expected: Any) -> str:
    """Asset spelling (a string or {forced_order: N}) as an outcome key."""
    if isinstance(expected, dict) and "forced_order" in expected:
        return f"forced_order:{int(expected['forced_order'])}"
    if expected in ("no_braiding", "family"):
        return expected
    raise ConfigurationError(f"unknown expected outcome {expected!r}")


# ============================================================================
# PRINTED WITNESSES
# ============================================================================

Triple = Tuple[ScalarExpr, ScalarExpr, ScalarExpr]


def _triple(raw: Any, row: Any, key: str) -> Triple:
    if not isinstance(raw, (list, tuple)) or len(raw) != 3:
        raise ConfigurationError(f"row {row}: witness {key} must list three expressions")
    try:
        return tuple(parse_expr(str(text)) for text in raw)
    except ParseError as exc:
        raise ConfigurationError(f"row {row}: witness {key}: {exc}") from exc


@dataclass(frozen=True)
class PrintedWitness:
    """
    Degrees and rank-2 diagram recorded for a row's kill.

    Attributes:
        criterion: Criterion named by the source ("1", "3", "3ext", ...)
        alpha, beta: Degree vectors in the row's vertex order
        printed: (q_aa, q̃_ab, q_bb) as printed, expressions in q
        reproduced: The diagram the degrees actually give, when it differs
    """
    criterion: str
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    printed: Triple
    reproduced: Optional[Triple] = None

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> Optional["PrintedWitness"]:
        raw = record.get("witness")
        if raw is None:
            return None
        row = record.get("row", "?")
        if not isinstance(raw, dict):
            raise ConfigurationError(f"row {row}: witness must be a mapping")
        missing = {"criterion", "alpha", "beta", "printed"} - set(raw)
        if missing:
            raise ConfigurationError(f"row {row}: witness is missing {sorted(missing)}")
        alpha, beta = tuple(int(x) for x in raw["alpha"]), tuple(int(x) for x in raw["beta"])
        if len(alpha) != record["rank"] or len(beta) != record["rank"]:
            raise ConfigurationError(f"row {row}: witness degrees must have length {record['rank']}")
        reproduced = raw.get("reproduced")
        return cls(
            criterion=str(raw["criterion"]),
            alpha=alpha,
            beta=beta,
            printed=_triple(raw["printed"], row, "printed"),
            reproduced=_triple(reproduced, row, "reproduced") if reproduced is not None else None,
        )

    @property
    def expected(self) -> Triple:
        return self.reproduced or self.printed

    def diagram(self, d: DynkinDiagram) -> DynkinDiagram:
        """Rank-2 diagram on the witness degrees of d."""
        return rank2(*degree_q(d, self.alpha, self.beta))

    def matches(self, d: DynkinDiagram, q: UnityRoot) -> Tuple[bool, DynkinDiagram]:
        """Whether the degrees of d give the expected diagram at q, up to symmetry."""
        found = self.diagram(d)
        wanted = rank2(*(e.evaluate(q) for e in self.expected))
        return symmetry_key(found) == symmetry_key(wanted), found


def _text(triple: Triple) -> str:
    parts = []
    for e in triple:
        factors = (["-1"] if e.sign else []) + ([f"z3^{e.zeta_power}"] if e.mentions_zeta else [])
        factors += [f"q^{e.q_power}"] if e.q_power else []
        parts.append("*".join(factors) or "1")
    return "(" + ", ".join(parts) + ")"


# ============================================================================
# REPORT
# ============================================================================

@dataclass
class SweepInstance:
    diagram: str
    order: int
    outcome: str
    kind: str = ""
    via: str = ""


@dataclass
class SweepRow:
    """
    One asset row (or census class) after the sweep.

    Attributes:
        source: asset | census | none (where the matrix came from)
        expected: Outcome key from the asset
        found: Outcome key computed by cartan_consistency ("" if unsourced)
        status: pass | fail | unsourced | undecided
        witness: Rank-2 diagram the printed degrees give at the first instance
    """
    row: int
    rank: int
    provenance: str
    source: str
    expected: str
    found: str = ""
    gcm: str = ""
    instances: List[SweepInstance] = field(default_factory=list)
    status: str = "unsourced"
    note: str = ""
    witness: str = ""


@dataclass
class SweepReport:
    rows: List[SweepRow] = field(default_factory=list)
    classes: List[SweepRow] = field(default_factory=list)
    census: Dict[str, Any] = field(default_factory=dict)
    runtime: Dict[str, Any] = field(default_factory=dict)

    def status_counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(r.status for r in self.rows).items()))

    def class_counts(self) -> Dict[str, int]:
        return dict(sorted(Counter(r.status for r in self.classes).items()))

    @property
    def passed(self) -> bool:
        rows_ok = all(r.status in ("pass", "unsourced") for r in self.rows)
        classes_ok = all(r.status == "pass" for r in self.classes)
        return rows_ok and classes_ok and self.census.get("matches", True)

    @property
    def failed(self) -> bool:
        return any(r.status == "fail" for r in self.rows + self.classes) or not self.census.get("matches", True)

    @property
    def undecided(self) -> bool:
        return any(r.status == "undecided" for r in self.rows + self.classes)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["status_counts"] = self.status_counts()
        data["class_counts"] = self.class_counts()
        data["passed"] = self.passed
        return data


# ============================================================================
# CENSUS
# ============================================================================

def census_outcomes(rank: int = 3) -> List[Tuple[GCM, CartanSolution]]:
    """Consistency outcome of every compactly hyperbolic class of a rank."""
    return [(c, cartan_consistency(c)) for c in compact_hyperbolic_census(rank)]


def _zero_pairs(c: GCM) -> int:
    return sum(1 for i in range(c.rank) for j in range(i + 1, c.rank) if c[i, j] == 0)


def census_summary(outcomes: Sequence[Tuple[GCM, CartanSolution]], expected: Dict[str, Any]) -> Dict[str, Any]:
    """Compare the generated distribution with the asset's census block."""
    lines = sum(1 for c, _ in outcomes if _zero_pairs(c) == 1)
    found = {
        "classes": len(outcomes),
        "lines": lines,
        "triangles": len(outcomes) - lines,
        "no_braiding": sum(1 for _, s in outcomes if isinstance(s, NoBraiding)),
        "family": sum(1 for _, s in outcomes if isinstance(s, Family)),
        "forced_orders": sorted(s.order for _, s in outcomes if isinstance(s, ForcedOrder)),
    }
    wanted = {key: expected.get(key) for key in found}
    if wanted["forced_orders"] is not None:
        wanted["forced_orders"] = sorted(wanted["forced_orders"])
    return {"found": found, "expected": wanted, "matches": found == wanted}


# ============================================================================
# PER ROW
# ============================================================================

def row_instances(
    c: GCM, solution: CartanSolution, orders: Sequence[int], weights: Optional[Sequence[int]] = None
) -> List[Tuple[int, DynkinDiagram]]:
    """Braidings realising c: one per order for a Family, the witness for ForcedOrder."""
    if isinstance(solution, ForcedOrder):
        return [(solution.order, braiding_from_labels(c, solution.witness))]
    if not isinstance(solution, Family):
        return []
    weights = tuple(weights) if weights else solution.generators[0]
    result = []
    for n in orders:
        try:
            result.append((n, cartan_braiding(c, make(1, n), weights)))
        except OrderTooSmall:
            logger.debug("order %d too small for %s", n, format_gcm(c))
    return result


def decide_instance(d: DynkinDiagram, oracle: RankTwoOracle, bounds: Bounds) -> Tuple[str, str, str]:
    """(outcome, certificate kind, rule) using the criteria first, then the full pipeline."""
    if d.rank == 3:
        verdict = apply_criteria(d, oracle=oracle, bounds=bounds)
        if verdict.is_infinite:
            return verdict.outcome.value, verdict.certificate.kind, "criteria"
    verdict = classify(d, bounds, oracle)
    kind = verdict.certificate.kind if verdict.certificate else ""
    return verdict.outcome.value, kind, "classify"


def check_witness(
    witness: PrintedWitness, instances: Sequence[Tuple[int, DynkinDiagram]]
) -> Tuple[Optional[str], str]:
    """
    Compare the witness degrees with the expected diagram on every instance.

    Returns:
        (mismatch message or None, diagram found at the first instance)
    """
    shown = ""
    for n, d in instances:
        ok, found = witness.matches(d, make(1, n))
        shown = shown or format_diagram(found)
        if not ok:
            return (f"criterion {witness.criterion} degrees give {format_diagram(found)} at order {n}, "
                    f"expected {_text(witness.expected)}"), shown
    return None, shown


def _status(instances: Sequence[SweepInstance]) -> str:
    outcomes = {i.outcome for i in instances}
    if "FiniteRoots" in outcomes:
        return "fail"
    if "Unknown" in outcomes:
        return "undecided"
    return "pass"


def sweep_row(
    record: Dict[str, Any],
    c: Optional[GCM],
    source: str,
    oracle: RankTwoOracle,
    bounds: Bounds,
    orders: Sequence[int],
) -> SweepRow:
    row = SweepRow(
        row=int(record["row"]),
        rank=int(record["rank"]),
        provenance=str(record["provenance"]),
        source=source,
        expected=expected_key(record["expected"]),
        note=str(record.get("note", "")),
    )
    if c is None:
        return row

    row.gcm = format_gcm(c)
    solution = cartan_consistency(c)
    row.found = outcome_key(solution)
    if row.found != row.expected:
        row.status = "fail"
        row.note = f"consistency gave {solution.describe()}"
        return row

    try:
        instances = row_instances(c, solution, orders, record.get("weights"))
    except InvalidArgument as exc:
        row.status = "fail"
        row.note = str(exc)
        return row

    for n, d in instances:
        outcome, kind, via = decide_instance(d, oracle, bounds)
        row.instances.append(SweepInstance(format_diagram(d), n, outcome, kind, via))
    row.status = _status(row.instances)

    witness = PrintedWitness.from_record(record)
    if witness is not None:
        mismatch, row.witness = check_witness(witness, instances)
        if mismatch is not None:
            row.status = "fail"
            row.note = mismatch
            logger.warning("row %d: %s", row.row, mismatch)
        elif witness.reproduced is not None:
            logger.info("row %d: printed witness %s reads %s", row.row,
                        _text(witness.printed), _text(witness.reproduced))
    return row


def sweep_class(
    index: int, c: GCM, solution: CartanSolution, oracle: RankTwoOracle, bounds: Bounds, orders: Sequence[int]
) -> SweepRow:
    """Instance check of one census class; no expectation beyond infinite GK dimension."""
    row = SweepRow(
        row=index,
        rank=c.rank,
        provenance="generated",
        source="census",
        expected=outcome_key(solution),
        found=outcome_key(solution),
        gcm=format_gcm(c),
    )
    try:
        instances = row_instances(c, solution, orders)
    except InvalidArgument as exc:
        row.status = "fail"
        row.note = str(exc)
        return row
    for n, d in instances:
        outcome, kind, via = decide_instance(d, oracle, bounds)
        row.instances.append(SweepInstance(format_diagram(d), n, outcome, kind, via))
    row.status = _status(row.instances)
    return row


def hyperbolic_sweep(
    data_dir=None,
    bounds: Optional[Bounds] = None,
    oracle: Optional[RankTwoOracle] = None,
    orders: Optional[Sequence[int]] = None,
    census: bool = True,
) -> SweepReport:
    """
    Run the sweep over every row of the compactly hyperbolic asset.

    Args:
        data_dir: Directory holding compactly_hyperbolic.yaml
        bounds: Exploration bounds; instances use harness_max_nodes
        oracle: Rank-2 membership oracle
        orders: Orders at which Family rows are instantiated
        census: Also sweep every generated census class
    """
    started = time.perf_counter()
    payload = AssetLoader(data_dir).load_hyperbolic_asset()
    records = payload["rows"]
    bounds = candidate_bounds(bounds or DEFAULT_BOUNDS)
    oracle = oracle or default_oracle()
    orders = list(orders or config.harness.sweep_orders)

    census_block = payload.get("census") or {}
    outcomes = census_outcomes(int(census_block.get("rank", 3)))
    report = SweepReport(census=census_summary(outcomes, census_block))
    if not report.census["matches"]:
        logger.warning("census distribution differs from the asset: %s", report.census["found"])

    for record in sorted(records, key=lambda r: r["row"]):
        if record.get("entries"):
            c, source = GCM.from_rows(record["entries"]), "asset"
        else:
            c, source = None, "none"
            logger.debug("row %s (rank %s): no matrix, unsourced", record["row"], record["rank"])

        row = sweep_row(record, c, source, oracle, bounds, orders)
        logger.info("row %d: %s (%s)", row.row, row.status, row.found or "unsourced")
        report.rows.append(row)

    if census:
        for index, (c, solution) in enumerate(outcomes, start=1):
            klass = sweep_class(index, c, solution, oracle, bounds, orders)
            logger.info("census class %d: %s (%s)", index, klass.status, klass.found)
            report.classes.append(klass)

    report.runtime = {"seconds": round(time.perf_counter() - started, 2), "orders": orders}
    return report
