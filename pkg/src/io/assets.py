"""
Loaders for the shipped data assets.

- Explicit column schemas (no inference surprises)
- SHA-256 pinning: a mismatch is logged, and raised in PROD
- Row-count metadata collected on load
"""

import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import pandas as pd
import yaml

from ..config import IS_PROD, config
from ..errors import ConfigurationError

logger = logging.getLogger(__name__)


# Explicit schema definitions
ASSET_SCHEMAS = {
    "rank2_table": ["id", "list_row", "kind", "v1", "e", "v2", "constraints", "provenance"],
    "compactly_hyperbolic": ["row", "rank", "entries", "provenance", "expected"],
}


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


class AssetLoader:
    """Reads the rank-2 table and the compactly-hyperbolic asset with hash checks."""

    def __init__(self, data_dir: Optional[Path] = None, strict: bool = IS_PROD):
        self.data_dir = Path(data_dir) if data_dir else config.project.data_dir
        self.strict = strict
        self.metadata: Dict[str, Any] = {}

    def _path(self, name: str) -> Path:
        files = {
            "rank2_table": "rank2_table.psv",
            "compactly_hyperbolic": "compactly_hyperbolic.yaml",
        }
        path = self.data_dir / files[name]
        if not path.exists():
            raise ConfigurationError(f"data asset not found: {path}")
        return path

    def _verify(self, name: str, path: Path, pinned: str) -> str:
        actual = file_sha256(path)
        self.metadata[f"{name}_sha256"] = actual
        if pinned and actual != pinned:
            message = f"{path.name}: sha256 {actual[:12]}… does not match pinned {pinned[:12]}…"
            if self.strict:
                raise ConfigurationError(message)
            logger.warning(message)
        return actual

    def load_rank2_frame(self) -> pd.DataFrame:
        path = self._path("rank2_table")
        self._verify("rank2_table", path, config.project.rank2_table_sha256)
        try:
            frame = pd.read_csv(
                path, sep="|", comment="#", dtype=str, keep_default_na=False,
                skipinitialspace=True,
            )
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
            raise ConfigurationError(f"corrupt rank-2 table {path}: {exc}") from exc

        frame.columns = [c.strip() for c in frame.columns]
        missing = set(ASSET_SCHEMAS["rank2_table"]) - set(frame.columns)
        if missing:
            raise ConfigurationError(f"rank-2 table is missing columns {sorted(missing)}")
        frame = frame.apply(lambda column: column.str.strip())
        self.metadata["rank2_rows"] = len(frame)
        logger.debug("loaded %d rank-2 rows from %s", len(frame), path.name)
        return frame

    def load_hyperbolic_asset(self) -> Dict[str, Any]:
        path = self._path("compactly_hyperbolic")
        self._verify("compactly_hyperbolic", path, config.project.hyperbolic_asset_sha256)
        with open(path, "r") as f:
            try:
                payload = yaml.safe_load(f) or {}
            except yaml.YAMLError as exc:
                raise ConfigurationError(f"corrupt asset {path}: {exc}") from exc

        rows = payload.get("rows")
        if not isinstance(rows, list):
            raise ConfigurationError(f"{path.name}: 'rows' must be a list")
        for record in rows:
            missing = set(ASSET_SCHEMAS["compactly_hyperbolic"]) - set(record)
            if missing:
                raise ConfigurationError(
                    f"{path.name}: row {record.get('row', '?')} is missing {sorted(missing)}"
                )
        self.metadata["hyperbolic_rows"] = len(rows)
        return payload


