"""
Markdown run reports for enumeration and sweep results.

An enumeration report has:
- Summary table (candidates, kills, list members, deferred, survivors)
- Kill histogram by certificate kind
- Survivor list with labels, compared with the expected set
- Replay results and the quality gate decision
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from ..config import REPORTS_DIR
from ..harness import SurvivorReport, SweepReport

logger = logging.getLogger(__name__)


class RunReportBuilder:
    """Builds markdown reports for harness runs."""

    def __init__(self, output_dir: Optional[Path] = None):
        """
        Initialize report builder.

        Args:
            output_dir: Directory to save reports (defaults to REPORTS_DIR)
        """
        self.output_dir = output_dir or REPORTS_DIR
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def create_enumeration_report(
        self,
        report: SurvivorReport,
        comparison: Optional[Dict[str, Any]] = None,
        gate_lines: Optional[List[str]] = None,
        output_path: Optional[Path] = None,
    ) -> str:
        """
        Create the run report of a line or triangle enumeration.

        Args:
            report: Finalized SurvivorReport
            comparison: ``compare_survivors`` output
            gate_lines: Quality gate section from AssetQualityChecker.gate_lines
            output_path: Where to save (None: do not save)

        Returns:
            Markdown-formatted report string
        """
        lines = [f"# Enumeration Report: {report.shape}s"]
        lines.append(f"\n**Date:** {datetime.now().strftime('%B %d, %Y')}")
        runtime = report.runtime
        if runtime:
            lines.append(
                f"**Run:** {runtime.get('atoms', '?')} atoms ({runtime.get('atom_source', '?')}), "
                f"membership `{runtime.get('membership_mode', '?')}`, "
                f"{runtime.get('jobs', '?')} jobs, {runtime.get('seconds', '?')} s"
            )
        lines.append("\n---\n")

        lines.append("## 📊 Summary")
        lines.append("\n| Candidates | Killed | In list | Deferred | Survivors | Conserved |")
        lines.append("|-----------|--------|---------|----------|-----------|-----------|")
        lines.append(
            f"| {report.total_candidates:,} | {report.total_killed:,} | {report.in_list:,} | "
            f"{report.deferred:,} | {len(report.survivors)} | {'✅' if report.conserved else '❌'} |"
        )

        lines.append("\n## 🔪 Kills by Certificate")
        if report.killed:
            lines.append("\n| Certificate | Count |")
            lines.append("|-------------|-------|")
            for kind, count in report.killed.items():
                lines.append(f"| `{kind}` | {count:,} |")
        else:
            lines.append("\n*No candidate was killed.*")

        lines.append("\n## 🧾 Survivors")
        if report.survivors:
            lines.append("\n| Diagram | Label | Nodes |")
            lines.append("|---------|-------|-------|")
            for s in report.survivors:
                lines.append(f"| `{s.diagram}` | {s.label} | {s.nodes} |")
        else:
            lines.append("\n*No survivors.*")

        if comparison is not None:
            lines.append("\n### Expected Survivor Set")
            status = "✅ matches" if comparison["ok"] else "❌ differs"
            lines.append(f"\n**Status:** {status}")
            for key in ("missing", "unexpected", "label_mismatch"):
                for item in comparison.get(key, []):
                    lines.append(f"- {key.replace('_', ' ')}: `{item}`")

        if report.replay:
            lines.append("\n## 🔁 Certificate Replay")
            lines.append(
                f"\n{report.replay.get('verified', 0)} of {report.replay.get('sampled', 0)} "
                "sampled kill certificates re-verified."
            )
            coherence = report.replay.get("coherence")
            if coherence is not None:
                lines.append(
                    f"\n{coherence['checked'] - len(coherence['incoherent'])} of {coherence['checked']} "
                    "survivors stay alive when the criteria start from other nodes."
                )

        if gate_lines:
            lines.extend(gate_lines)

        lines.append("\n---")
        lines.append(f"\n*Report generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}*")
        return self._save("\n".join(lines), output_path)

    def create_sweep_report(self, sweep: SweepReport, output_path: Optional[Path] = None) -> str:
        """Create the report of the compactly hyperbolic sweep."""
        lines = ["# Compactly Hyperbolic Sweep"]
        lines.append(f"\n**Date:** {datetime.now().strftime('%B %d, %Y')}")
        lines.append("\n---\n")

        census = sweep.census
        if census:
            lines.append("## 🧮 Census")
            lines.append("\n| Quantity | Found | Expected |")
            lines.append("|----------|-------|----------|")
            for key, found in census["found"].items():
                lines.append(f"| {key} | {found} | {census['expected'].get(key)} |")

        lines.append("\n## 📋 Rows")
        lines.append("\n| Row | Rank | Source | Expected | Found | Instances | Status |")
        lines.append("|-----|------|--------|----------|-------|-----------|--------|")
        icons = {"pass": "✅", "fail": "❌", "undecided": "⚠️", "unsourced": "➖"}
        for row in sweep.rows:
            decided = sum(1 for i in row.instances if i.outcome == "InfiniteGK")
            lines.append(
                f"| {row.row} | {row.rank} | {row.source} | {row.expected} | {row.found or '-'} | "
                f"{decided}/{len(row.instances)} | {icons.get(row.status, '')} {row.status} |"
            )

        if sweep.classes:
            lines.append("\n## 🧬 Census Classes")
            lines.append("\n| Class | Matrix | Outcome | Instances | Status |")
            lines.append("|-------|--------|---------|-----------|--------|")
            for row in sweep.classes:
                decided = sum(1 for i in row.instances if i.outcome == "InfiniteGK")
                lines.append(
                    f"| {row.row} | `{row.gcm}` | {row.found} | {decided}/{len(row.instances)} | "
                    f"{icons.get(row.status, '')} {row.status} |"
                )

        notes = [r for r in sweep.rows if r.note]
        if notes:
            lines.append("\n### Notes")
            for row in notes:
                lines.append(f"- Row {row.row}: {row.note}")

        lines.append("\n## 🚦 Decision\n")
        lines.append("**Status:** ✅ **PASS**" if sweep.passed else "**Status:** ❌ **FAIL**")
        lines.append(f"\nRows: {sweep.status_counts()}")
        if sweep.classes:
            lines.append(f"\nCensus classes: {sweep.class_counts()}")
        return self._save("\n".join(lines), output_path)

    def _save(self, text: str, output_path: Optional[Path]) -> str:
        if output_path is not None:
            output_path = Path(output_path)
            output_path.parent.mkdir(parents=True, exist_ok=True)
            output_path.write_text(text + "\n")
            logger.info("saved report: %s", output_path)
        return text

    def survivor_table(self, report: SurvivorReport) -> pd.DataFrame:
        """Survivors as a frame, for CSV export."""
        table = pd.DataFrame(
            [(s.diagram, s.label, s.nodes) for s in report.survivors],
            columns=["Diagram", "Label", "Nodes"],
        )
        table.insert(0, "Shape", report.shape)
        return table
