"""Data asset loading."""

from .assets import ASSET_SCHEMAS, AssetLoader, file_sha256

__all__ = ["ASSET_SCHEMAS", "AssetLoader", "file_sha256"]
