"""
Tests for asset contracts, the quality gate and certificate replay.
"""

import json
from pathlib import Path

import pytest
import yaml

from src.diagram import DynkinDiagram, format_diagram
from src.groupoid import finiteness
from src.quality import (
    ASSET_CONTRACTS,
    AssetQualityChecker,
    CheckSeverity,
    replay_certificate,
    replay_sample,
)
from src.criteria import classify
from src.scalar import ONE, make

DATA = Path(__file__).parent.parent / "data"
Q5 = make(1, 5)
BLOCKED = DynkinDiagram((ONE, Q5), (Q5,))
AFFINE = DynkinDiagram((Q5, Q5), (Q5 ** -2,))


def kill(d, verdict):
    """A kill record as written to the JSON report."""
    return {"diagram": format_diagram(d), "verdict": json.loads(json.dumps(verdict.to_dict()))}


@pytest.fixture(scope="module")
def checker():
    checker = AssetQualityChecker()
    checker.check_all()
    return checker


class TestAssetChecks:
    """Contracts on the shipped assets."""

    def test_contracts(self):
        assert set(ASSET_CONTRACTS) == {"rank2_table", "compactly_hyperbolic"}
        assert ASSET_CONTRACTS["rank2_table"].id_column == "id"
        assert "expected" in ASSET_CONTRACTS["compactly_hyperbolic"].required_columns

    def test_shipped_assets_pass(self, checker):
        failed = [r for r in checker.results if not r.passed and r.severity is CheckSeverity.ERROR]
        assert failed == []
        assert not checker.has_errors()
        names = {r.check_name for r in checker.results}
        assert {"rank2_table_sha256", "rank2_finite_closure", "rank2_parametric_closure"} <= names
        assert {"hyperbolic_records", "hyperbolic_distinct_classes", "hyperbolic_census_block"} <= names

    def test_gate_lines_end_with_decision(self, checker):
        lines = checker.gate_lines()
        assert "## 🚦 Quality Gate Decision\n" in "\n".join(lines) + "\n"
        assert any(line.startswith("**Status:**") for line in lines[-3:])

    def test_report_file(self, checker, tmp_path):
        path = tmp_path / "out" / "quality.md"
        checker.generate_report(path)
        text = path.read_text()
        assert text.startswith("# Data Asset Quality Report")
        assert "Quality Gate Decision" in text

    def test_quoted_row_needs_entries(self, tmp_path):
        asset = yaml.safe_load((DATA / "compactly_hyperbolic.yaml").read_text())
        asset["rows"][1]["provenance"] = "quoted"
        (tmp_path / "compactly_hyperbolic.yaml").write_text(yaml.safe_dump(asset))
        checker = AssetQualityChecker(data_dir=tmp_path)
        checker.check_hyperbolic_asset()
        result = next(r for r in checker.results if r.check_name == "hyperbolic_records")
        assert not result.passed
        assert "row 2: quoted row without entries" in result.message

    def test_replay_failures_are_errors(self):
        checker = AssetQualityChecker()
        checker.add_replay({"sampled": 2, "verified": 2, "failures": []})
        assert not checker.has_errors()
        checker.add_replay({"sampled": 2, "verified": 1, "failures": [{"diagram": "x"}]})
        assert checker.has_errors()


class TestReplay:
    """Re-verification of certificates from their text."""

    def test_blocked(self):
        record = kill(BLOCKED, classify(BLOCKED))
        result = replay_certificate(record["diagram"], record["verdict"])
        assert result.kind == "BlockedReflection"
        assert result.verified, result.reason

    def test_tampered_blocked(self):
        record = kill(BLOCKED, classify(BLOCKED))
        record["verdict"]["certificate"]["vertex"] = 1
        result = replay_certificate(record["diagram"], record["verdict"])
        assert not result.verified
        assert "reflects" in result.reason

    def test_root_growth(self):
        record = kill(AFFINE, finiteness(AFFINE))
        assert replay_certificate(record["diagram"], record["verdict"]).verified

    def test_tampered_growth(self):
        record = kill(AFFINE, finiteness(AFFINE))
        record["verdict"]["certificate"]["sizes"][-1] += 1
        result = replay_certificate(record["diagram"], record["verdict"])
        assert result.reason == "orbit sizes differ"

    def test_six_point(self, q1):
        record = kill(q1, classify(q1))
        assert replay_certificate(record["diagram"], record["verdict"]).verified

    def test_missing_certificate(self):
        result = replay_certificate("2; 1/5 1/5; 12:4/5", {"outcome": "Unknown"})
        assert not result.verified
        assert result.reason == "no certificate to replay"

    def test_sample(self):
        kills = [kill(BLOCKED, classify(BLOCKED)), kill(AFFINE, finiteness(AFFINE))]
        summary = replay_sample(kills, sample=5, seed=1)
        assert summary == {"sampled": 2, "verified": 2, "failures": []}
