"""
Data asset contracts and the quality gate.

Production features:
- Asset contracts (required columns, unique ids, minimum row counts)
- Pinned-hash verification
- Self-consistency of the rank-2 table under reflections
- Fail vs warn severity levels
- Markdown quality report generation
"""

import logging
from collections import Counter
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Set

import pandas as pd

from ..cartan import GCM, GCMType, gcm_class
from ..config import IS_PROD, config
from ..errors import ConfigurationError, InvalidArgument
from ..groupoid import explore
from ..harness import PrintedWitness
from ..io import ASSET_SCHEMAS, AssetLoader
from ..ranktwo import Rank2Table, rank2, rows_from_frame
from ..scalar import primitive_roots

logger = logging.getLogger(__name__)


class CheckSeverity(Enum):
    """Severity levels for quality check failures."""
    INFO = "info"
    WARNING = "warning"  # Warn but continue
    ERROR = "error"  # Fail execution


@dataclass
class QualityCheckResult:
    """Result of a quality check."""
    check_name: str
    passed: bool
    severity: CheckSeverity
    message: str
    details: Optional[Dict] = None


@dataclass
class AssetContract:
    """Contract defining expected asset structure."""
    name: str
    required_columns: Set[str]
    min_row_count: int
    id_column: str


HYPERBOLIC_PROVENANCE = ("quoted", "derived", "external")

ASSET_CONTRACTS = {
    "rank2_table": AssetContract(
        name="rank2_table",
        required_columns=set(ASSET_SCHEMAS["rank2_table"]),
        min_row_count=20,
        id_column="id",
    ),
    "compactly_hyperbolic": AssetContract(
        name="compactly_hyperbolic",
        required_columns=set(ASSET_SCHEMAS["compactly_hyperbolic"]),
        min_row_count=31,
        id_column="row",
    ),
}

# Orders at which parametric rows must have a finite reflection closure
AUDIT_ORDERS = (5, 7, 8, 9, 12)


class AssetQualityChecker:
    """
    Validates the shipped data assets and certificate replays, and writes
    the gate report.
    """

    def __init__(self, data_dir: Optional[Path] = None):
        self.loader = AssetLoader(data_dir=data_dir, strict=False)
        self.results: List[QualityCheckResult] = []

    def _add(self, name: str, passed: bool, message: str, severity: CheckSeverity = CheckSeverity.ERROR,
             details: Optional[Dict] = None) -> None:
        self.results.append(QualityCheckResult(
            check_name=name,
            passed=passed,
            severity=CheckSeverity.INFO if passed else severity,
            message=message,
            details=details,
        ))

    def check_all(self) -> List[QualityCheckResult]:
        self.results = []
        self.check_rank2_table()
        self.check_hyperbolic_asset()
        return self.results

    # ------------------------------------------------------------------
    # shared contract checks
    # ------------------------------------------------------------------

    def _check_hash(self, name: str, pinned: str) -> None:
        actual = self.loader.metadata.get(f"{name}_sha256", "")
        if not pinned:
            self._add(f"{name}_sha256", False, f"{name} has no pinned hash",
                      CheckSeverity.WARNING, {"actual": actual})
        elif actual != pinned:
            severity = CheckSeverity.ERROR if IS_PROD else CheckSeverity.WARNING
            self._add(f"{name}_sha256", False, f"{name} hash does not match the pinned value",
                      severity, {"actual": actual, "pinned": pinned})
        else:
            self._add(f"{name}_sha256", True, f"{name} hash verified")

    def _check_contract(self, frame: pd.DataFrame, contract: AssetContract) -> None:
        missing = contract.required_columns - set(frame.columns)
        self._add(f"{contract.name}_columns", not missing,
                  f"{contract.name}: missing columns {sorted(missing)}" if missing
                  else f"All required columns present in {contract.name}")

        count = len(frame)
        self._add(f"{contract.name}_row_count", count >= contract.min_row_count,
                  f"{contract.name} has {count} rows (expected >= {contract.min_row_count})",
                  CheckSeverity.WARNING)

        if contract.id_column in frame.columns:
            dups = [k for k, n in Counter(frame[contract.id_column]).items() if n > 1]
            self._add(f"{contract.name}_unique_ids", not dups,
                      f"{contract.name}: duplicate ids {dups}" if dups else f"{contract.name} ids are unique")

    # ------------------------------------------------------------------
    # rank-2 table
    # ------------------------------------------------------------------

    def check_rank2_table(self) -> None:
        try:
            frame = self.loader.load_rank2_frame()
        except ConfigurationError as exc:
            self._add("rank2_table_load", False, str(exc))
            return
        self._check_hash("rank2_table", config.project.rank2_table_sha256)
        self._check_contract(frame, ASSET_CONTRACTS["rank2_table"])

        try:
            rows = rows_from_frame(frame)
        except ConfigurationError as exc:
            self._add("rank2_table_rows", False, str(exc))
            return
        self._add("rank2_table_rows", True, f"{len(rows)} rows parse")

        table = Rank2Table.build(rows)
        self._add("rank2_finite_closure", not table.dropped,
                  f"finite rows without a closed reflection orbit: {table.dropped}" if table.dropped
                  else f"{len(table.finite_rows)} finite rows close under reflections",
                  details={"triples": len(table.finite)})

        split = table.split_list_rows()
        self._add("rank2_list_rows", not split,
                  f"list rows spanning several reflection orbits: {split}" if split
                  else "rows sharing a list row share a reflection orbit")

        open_instances = []
        for row in table.parametric_rows:
            for n in AUDIT_ORDERS:
                for triple, q, _ in row.instances(primitive_roots(n)):
                    if not explore(rank2(*triple), with_roots=True).is_complete:
                        open_instances.append(f"{row.id}@{q}")
                    break
        self._add("rank2_parametric_closure", not open_instances,
                  f"parametric instances without finite closure: {open_instances}" if open_instances
                  else "parametric rows have finite closures at the audit orders")

    # ------------------------------------------------------------------
    # compactly hyperbolic asset
    # ------------------------------------------------------------------

    def check_hyperbolic_asset(self) -> None:
        try:
            payload = self.loader.load_hyperbolic_asset()
        except ConfigurationError as exc:
            self._add("compactly_hyperbolic_load", False, str(exc))
            return
        self._check_hash("compactly_hyperbolic", config.project.hyperbolic_asset_sha256)
        records = payload["rows"]
        self._check_contract(pd.DataFrame(records), ASSET_CONTRACTS["compactly_hyperbolic"])

        malformed = []
        for record in records:
            if record["provenance"] not in HYPERBOLIC_PROVENANCE:
                malformed.append(f"row {record['row']}: unknown provenance {record['provenance']!r}")
            elif record["provenance"] != "external" and not record.get("entries"):
                malformed.append(f"row {record['row']}: {record['provenance']} row without entries")
            try:
                PrintedWitness.from_record(record)
            except ConfigurationError as exc:
                malformed.append(str(exc))
        self._add("hyperbolic_records", not malformed, "; ".join(malformed)
                  or "provenance and witnesses are well formed")

        bad = []
        for record in records:
            if not record.get("entries"):
                continue
            try:
                c = GCM.from_rows(record["entries"])
            except InvalidArgument as exc:
                bad.append(f"row {record['row']}: {exc}")
                continue
            klass = gcm_class(c)
            if c.rank != record["rank"] or klass.kind is not GCMType.INDEFINITE or not klass.compactly_hyperbolic:
                bad.append(f"row {record['row']}: not a compactly hyperbolic matrix of rank {record['rank']}")
        self._add("hyperbolic_entries", not bad, "; ".join(bad) or "quoted matrices are compactly hyperbolic")

        if not bad:
            classes = Counter(
                GCM.from_rows(r["entries"]).canonical().entries for r in records if r.get("entries")
            )
            shared = sorted(
                r["row"] for r in records
                if r.get("entries") and classes[GCM.from_rows(r["entries"]).canonical().entries] > 1
            )
            self._add("hyperbolic_distinct_classes", not shared,
                      f"rows {shared} share a matrix class" if shared else "rows with entries are distinct classes")

        census = payload.get("census") or {}
        rank_rows = [r for r in records if r["rank"] == census.get("rank", 3)]
        counted = Counter(
            "forced_order" if isinstance(r["expected"], dict) else r["expected"] for r in rank_rows
        )
        expected = {
            "no_braiding": census.get("no_braiding"),
            "family": census.get("family"),
            "forced_order": len(census.get("forced_orders") or []),
        }
        mismatched = {k: (counted.get(k, 0), v) for k, v in expected.items() if counted.get(k, 0) != v}
        self._add("hyperbolic_census_block", not mismatched,
                  f"row outcomes disagree with the census block: {mismatched}" if mismatched
                  else "row outcomes agree with the census block")

    # ------------------------------------------------------------------
    # certificate replay
    # ------------------------------------------------------------------

    def add_replay(self, replay: Dict[str, Any]) -> None:
        """Record a replay summary from ``replay_sample``."""
        if not replay:
            return
        failures = replay.get("failures", [])
        self._add("certificate_replay", not failures,
                  f"{replay.get('verified', 0)}/{replay.get('sampled', 0)} certificates re-verified",
                  details={"failures": failures[:5]} if failures else None)
        coherence = replay.get("coherence")
        if coherence is not None:
            incoherent = coherence.get("incoherent", [])
            self._add("survivor_coherence", not incoherent,
                      f"{len(incoherent)} of {coherence.get('checked', 0)} survivors killed from another node",
                      details={"incoherent": incoherent[:5]} if incoherent else None)

    # ------------------------------------------------------------------
    # report
    # ------------------------------------------------------------------

    def gate_lines(self) -> List[str]:
        """Markdown lines of the check tables and the gate decision."""
        lines = []
        errors_list = [r for r in self.results if r.severity == CheckSeverity.ERROR and not r.passed]
        warnings_list = [r for r in self.results if r.severity == CheckSeverity.WARNING and not r.passed]
        info_list = [r for r in self.results if r.passed]

        lines.append("\n## Summary\n")
        lines.append(f"- ✅ **Passed:** {len(info_list)}")
        lines.append(f"- ❌ **Errors:** {len(errors_list)}")
        lines.append(f"- ⚠️  **Warnings:** {len(warnings_list)}")

        for title, group in (("❌ Errors (Fail)", errors_list), ("⚠️  Warnings (Non-blocking)", warnings_list)):
            if group:
                lines.append(f"\n## {title}")
                lines.append("\n| Check | Message | Details |")
                lines.append("|-------|---------|---------|")
                for r in group:
                    lines.append(f"| `{r.check_name}` | {r.message} | {r.details or '-'} |")

        if info_list:
            lines.append("\n## ✅ Passed Checks")
            lines.append("\n| Check | Message |")
            lines.append("|-------|---------|")
            for r in info_list:
                lines.append(f"| `{r.check_name}` | {r.message} |")

        lines.append("\n## 🚦 Quality Gate Decision\n")
        if errors_list:
            lines.append("**Status:** ❌ **FAIL** - Critical errors must be fixed")
            lines.append(f"\n{len(errors_list)} error(s) detected.")
        elif warnings_list:
            lines.append("**Status:** ⚠️  **WARN** - Proceed with caution")
            lines.append(f"\n{len(warnings_list)} warning(s) detected. Review recommended but not blocking.")
        else:
            lines.append("**Status:** ✅ **PASS** - All quality checks passed")
        return lines

    def generate_report(self, output_path: Path) -> None:
        """
        Generate markdown quality report.

        Args:
            output_path: Path to save report (e.g., reports/asset_quality_report.md)
        """
        lines = ["# Data Asset Quality Report"]
        lines.append(f"\n**Generated:** {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        lines.append(f"\n**Total Checks:** {len(self.results)}")
        lines.extend(self.gate_lines())

        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text("\n".join(lines) + "\n")
        logger.info("quality report saved: %s", output_path)

    def has_errors(self) -> bool:
        """Check if any ERROR-level checks failed."""
        return any(r.severity == CheckSeverity.ERROR and not r.passed for r in self.results)
