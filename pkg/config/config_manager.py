"""
File loading for the edit distance toolkit: property specs, CRG files,
JSON helpers and the catalog cache directory.
"""
import hashlib
import json
import os
import logging
from typing import Any, Dict

from .constants import CACHE_DIR
from crg.crg_io import crg_to_dict, read_crg_file
from crg.model import Crg
from graphs.family import FamilySpec
from utils.error_handler import SpecFormatError

logger = logging.getLogger(__name__)


def ensure_cache_directory(root: str = None) -> str:
    """
    Ensures the catalog cache root exists and returns it.
    """
    directory = root or os.environ.get("EDFN_CACHE_DIR") or CACHE_DIR
    try:
        os.makedirs(directory, exist_ok=True)
        logger.debug(f"Ensured directory exists: {directory}")
    except OSError as e:
        logger.error(f"Failed to create directory {directory}: {e}")
        raise
    return directory


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise SpecFormatError(os.path.basename(path), f"invalid JSON at line {e.lineno}: {e.msg}")


def save_json(data: Any, path: str):
    """
    Writes JSON with sorted keys and a trailing newline so equal data gives equal bytes.
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    logger.debug(f"Saved {path}")


def load_property_spec(path: str) -> FamilySpec:
    """
    Loads a forbidden-family spec:
    {"forbidden": ["<graph6>", ...], "families": [{"type": "cycles_ge", "m": 5}, ...]}
    """
    data = load_json(path)
    spec = FamilySpec.from_dict(data)
    logger.info(f"Loaded property spec from {path}: {spec}")
    return spec


def load_crg_file(path: str) -> Crg:
    crg = read_crg_file(path)
    logger.info(f"Loaded CRG {crg.label()} ({crg.k} vertices) from {path}")
    return crg


def digest(data: Any) -> str:
    """sha256 of canonical JSON, shortened to 16 hex digits."""
    payload = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def spec_hash(spec: FamilySpec) -> str:
    return digest(spec.to_dict())


def crg_hash(crg: Crg) -> str:
    """Digest of a CRG as written, so relabeled copies hash differently."""
    return digest(crg_to_dict(crg))


def crg_bounds(crg: Crg) -> Dict[str, int]:
    """The catalog window a CRG sits in: its white and black vertex counts."""
    return bounds_dict(len(crg.white_vertices), len(crg.black_vertices))


def bounds_dict(max_white: int, max_black: int) -> Dict[str, int]:
    return {"max_white": max_white, "max_black": max_black}
