"""
Configuration module for the Nichols toolkit.

Structured configuration with environment support and optional YAML loading.
Every bound used by exploration, membership and the enumeration harness is
read from here so that runs are reproducible.
"""

import os
from pathlib import Path
from dataclasses import dataclass, field
from typing import List, Optional
import yaml

from .errors import ConfigurationError


# ============================================================================
# ENVIRONMENT DETECTION
# ============================================================================

ENV = os.getenv("NICHOLS_ENV", "DEV")  # DEV, CI, PROD
IS_CI = ENV == "CI"
IS_PROD = ENV == "PROD"


# ============================================================================
# PROJECT CONFIGURATION
# ============================================================================

@dataclass
class ProjectConfig:
    """Project-level paths and pinned data assets."""

    project_root: Path = field(default_factory=lambda: Path(__file__).parent.parent)

    @property
    def data_dir(self) -> Path:
        return self.project_root / "data"

    @property
    def reports_dir(self) -> Path:
        return self.project_root / "reports"

    @property
    def rank2_table_file(self) -> Path:
        return self.data_dir / "rank2_table.psv"

    @property
    def hyperbolic_asset_file(self) -> Path:
        return self.data_dir / "compactly_hyperbolic.yaml"

    # SHA-256 of the shipped assets; empty string disables the check
    rank2_table_sha256: str = ""
    hyperbolic_asset_sha256: str = ""

    def ensure_directories(self) -> None:
        """Create output directories if they don't exist."""
        self.reports_dir.mkdir(parents=True, exist_ok=True)


# ============================================================================
# EXPLORATION BOUNDS
# ============================================================================

@dataclass
class Bounds:
    """Limits for groupoid exploration and root closure."""

    max_nodes: int = 2000
    max_roots: int = 10000
    max_root_height: int = 100

    # Fallback cap for the Cartan-entry search (q_ii = 1 never searches)
    cartan_search_cap: int = 10_000

    # Root-growth certificate search
    growth_iterations: int = 50
    growth_word_limit: int = 2000

    # Cartan consistency: largest exponent grid enumerated
    consistency_enumeration_cap: int = 1_000_000

    def replace(self, **changes) -> "Bounds":
        """Copy with some fields overridden (None values are ignored)."""
        values = {**self.__dict__}
        values.update({k: v for k, v in changes.items() if v is not None})
        return Bounds(**values)


# ============================================================================
# RANK-2 MEMBERSHIP CONFIGURATION
# ============================================================================

MEMBERSHIP_MODES = ("table", "closure", "hybrid")
ATOM_SOURCES = ("table", "closure")


@dataclass
class RankTwoConfig:
    """How rank-2 list membership is decided and where atoms come from."""

    membership_mode: str = "hybrid"
    atom_source: str = "table"

    # G_f is the divisor closure of these orders
    gf_generators: List[int] = field(default_factory=lambda: [14, 18, 20, 24, 30])

    def validate(self) -> None:
        if self.membership_mode not in MEMBERSHIP_MODES:
            raise ConfigurationError(f"unknown membership mode {self.membership_mode!r}")
        if self.atom_source not in ATOM_SOURCES:
            raise ConfigurationError(f"unknown atom source {self.atom_source!r}")


# ============================================================================
# HARNESS CONFIGURATION
# ============================================================================

@dataclass
class HarnessConfig:
    """Enumeration harness and sweep parameters."""

    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    chunk_size: int = 8

    # Exploration cap per enumerated candidate
    harness_max_nodes: int = 400

    # All-sA1 triangle cross-check sample size
    sa1_samples: int = 200

    # Kill certificates replayed per run (0 disables)
    replay_sample: int = 100
    replay_seed: int = 20240101

    # Orders at which Family rows of the sweep are instantiated
    sweep_orders: List[int] = field(default_factory=lambda: [5, 7, 8, 9, 11, 12, 13])


# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================

@dataclass
class LoggingConfig:
    level: str = "INFO"


# ============================================================================
# CONFIGURATION LOADER
# ============================================================================

class ConfigLoader:
    """Loads configuration from YAML files (optional) or uses defaults."""

    def __init__(self, config_file: Optional[Path] = None):
        """
        Initialize configuration loader.

        Args:
            config_file: Optional path to config.yaml file
        """
        self.config_file = config_file
        self.project = ProjectConfig()
        self.bounds = Bounds()
        self.ranktwo = RankTwoConfig()
        self.harness = HarnessConfig()
        self.logging = LoggingConfig()

        if config_file and config_file.exists():
            self._load_from_yaml(config_file)

        self._apply_env_overrides()
        self.ranktwo.validate()

        self.project.ensure_directories()

    def _load_from_yaml(self, config_file: Path) -> None:
        """Load configuration from YAML file."""
        with open(config_file, 'r') as f:
            config_data = yaml.safe_load(f) or {}

        sections = {
            'project': self.project,
            'bounds': self.bounds,
            'ranktwo': self.ranktwo,
            'harness': self.harness,
            'logging': self.logging,
        }
        for name, target in sections.items():
            for key, value in (config_data.get(name) or {}).items():
                if hasattr(target, key):
                    setattr(target, key, value)

    def _apply_env_overrides(self) -> None:
        """Apply environment-specific overrides."""
        if IS_CI:
            # CI: fewer workers, smaller per-candidate exploration
            self.harness.jobs = min(self.harness.jobs, 2)
            self.harness.harness_max_nodes = 200
            self.harness.replay_sample = 20

        if IS_PROD:
            # Production: table misses are always confirmed by closure
            self.ranktwo.membership_mode = "hybrid"


# ============================================================================
# GLOBAL CONFIG INSTANCE
# ============================================================================

_config_file = Path(__file__).parent.parent / "config.yaml"
config = ConfigLoader(config_file=_config_file if _config_file.exists() else None)

PROJECT_ROOT = config.project.project_root
DATA_DIR = config.project.data_dir
REPORTS_DIR = config.project.reports_dir
RANK2_TABLE_FILE = config.project.rank2_table_file
HYPERBOLIC_ASSET_FILE = config.project.hyperbolic_asset_file

DEFAULT_BOUNDS = config.bounds
MEMBERSHIP_MODE = config.ranktwo.membership_mode
ATOM_SOURCE = config.ranktwo.atom_source
GF_GENERATORS = tuple(config.ranktwo.gf_generators)

JOBS = config.harness.jobs
HARNESS_MAX_NODES = config.harness.harness_max_nodes
