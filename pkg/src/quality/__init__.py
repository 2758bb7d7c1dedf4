"""Asset contracts, certificate replay and the quality gate."""

from .checks import ASSET_CONTRACTS, AssetContract, AssetQualityChecker, CheckSeverity, QualityCheckResult
from .replay import REPLAYERS, ReplayResult, replay_certificate, replay_sample, survivor_coherence, walk

__all__ = [
    "ASSET_CONTRACTS",
    "AssetContract",
    "AssetQualityChecker",
    "CheckSeverity",
    "QualityCheckResult",
    "REPLAYERS",
    "ReplayResult",
    "replay_certificate",
    "replay_sample",
    "survivor_coherence",
    "walk",
]
