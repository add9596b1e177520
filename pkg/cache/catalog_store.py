"""
Content-addressed catalog cache: <cache root>/<spec hash>/<side>-<w>x<b>.json.
"""
import json
import os
import logging
from typing import Optional

from config.config_manager import ensure_cache_directory, save_json, spec_hash
from config.constants import CatalogSide, DEFAULT_THREADS
from enumeration.catalog import Catalog, enumerate_catalog
from graphs.family import FamilySpec
from utils.error_handler import FormatError

logger = logging.getLogger(__name__)


def catalog_path(property_hash: str, side: CatalogSide, max_white: int, max_black: int,
                 root: Optional[str] = None) -> str:
    base = ensure_cache_directory(root)
    return os.path.join(base, property_hash, f"{side.value}-{max_white}x{max_black}.json")


def load_catalog(property_hash: str, side: CatalogSide, max_white: int, max_black: int,
                 root: Optional[str] = None) -> Optional[Catalog]:
    """The cached catalog, or None on a miss or an unreadable file."""
    path = catalog_path(property_hash, side, max_white, max_black, root)
    try:
        with open(path, "r", encoding="utf-8") as f:
            catalog = Catalog.from_dict(json.load(f))
    except FileNotFoundError:
        logger.info(f"No cached catalog at {path}")
        return None
    except (json.JSONDecodeError, FormatError) as e:
        logger.warning(f"Ignoring corrupt cached catalog {path}: {e}")
        return None
    if catalog.property_hash != property_hash:
        logger.warning(f"Cached catalog {path} belongs to spec {catalog.property_hash}, ignoring")
        return None
    logger.info(f"Loaded {len(catalog)} cached entries from {path}")
    return catalog


def save_catalog(catalog: Catalog, root: Optional[str] = None) -> str:
    path = catalog_path(catalog.property_hash, catalog.side, catalog.max_white, catalog.max_black, root)
    try:
        save_json(catalog.to_dict(), path)
        logger.info(f"Saved catalog with {len(catalog)} entries to {path}")
    except OSError as e:
        logger.error(f"Failed to save catalog to {path}: {e}")
        raise
    return path


def clear_catalog(property_hash: str, side: CatalogSide, max_white: int, max_black: int,
                  root: Optional[str] = None):
    """Remove one cached catalog."""
    path = catalog_path(property_hash, side, max_white, max_black, root)
    if os.path.exists(path):
        os.remove(path)
        logger.info(f"Cleared cached catalog {path}")
    else:
        logger.info(f"No cached catalog at {path}, nothing to clear")


def get_catalog(spec: FamilySpec, max_white: int, max_black: int,
                side: CatalogSide = CatalogSide.ZERO_CORE, root: Optional[str] = None,
                threads: int = DEFAULT_THREADS, use_cache: bool = True) -> Catalog:
    """Cached catalog when present, otherwise enumerate and store it."""
    digest = spec_hash(spec)
    if use_cache:
        cached = load_catalog(digest, side, max_white, max_black, root)
        if cached is not None:
            return cached
    catalog = enumerate_catalog(spec, max_white, max_black, side, threads)
    if use_cache:
        save_catalog(catalog, root)
    return catalog
