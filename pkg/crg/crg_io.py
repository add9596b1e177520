"""
CRG text and JSON formats.

Text: line 1 is k, line 2 has k characters over {W,B}, then k-1 rows of the
upper triangle over {w,b,g}, row i holding k-i characters.
JSON: {"k": k, "vcolors": "WB..", "ecolors": ["gw..", ...]} with the same rows.
"""
import json
import logging
from typing import Dict, List

from crg.model import Crg, EdgeColor, VertexColor
from utils.error_handler import CrgFormatError

logger = logging.getLogger(__name__)

_VERTEX = {c.value: c for c in VertexColor}
_EDGE = {c.value: c for c in EdgeColor}


def _rows(crg: Crg) -> List[str]:
    return ["".join(crg.edge(i, j).value for j in range(i + 1, crg.k)) for i in range(crg.k - 1)]


def _from_parts(k: int, vline: str, rows: List[str], first_row_line: int = None) -> Crg:
    if len(vline) != k:
        raise CrgFormatError(f"expected {k} vertex colors, got {len(vline)}", 2 if first_row_line else None)
    vcolors = []
    for ch in vline:
        if ch not in _VERTEX:
            raise CrgFormatError(f"vertex color {ch!r} is not W or B", 2 if first_row_line else None)
        vcolors.append(_VERTEX[ch])
    if len(rows) != k - 1:
        raise CrgFormatError(f"expected {k - 1} edge rows, got {len(rows)}")
    ecolors = []
    for i, row in enumerate(rows):
        line = first_row_line + i if first_row_line else None
        if len(row) != k - 1 - i:
            raise CrgFormatError(f"edge row {i + 1} needs {k - 1 - i} characters, got {len(row)}", line)
        for ch in row:
            if ch not in _EDGE:
                raise CrgFormatError(f"edge color {ch!r} is not w, b or g", line)
            ecolors.append(_EDGE[ch])
    return Crg(tuple(vcolors), tuple(ecolors))


def parse_crg_text(text: str) -> Crg:
    lines = [line.strip() for line in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise CrgFormatError("empty CRG file", 1)
    try:
        k = int(lines[0])
    except ValueError:
        raise CrgFormatError(f"vertex count {lines[0]!r} is not an integer", 1)
    if k < 1:
        raise CrgFormatError(f"vertex count must be positive, got {k}", 1)
    if len(lines) < 2:
        raise CrgFormatError("missing vertex color line", 2)
    return _from_parts(k, lines[1], lines[2:], first_row_line=3)


def emit_crg_text(crg: Crg) -> str:
    return "\n".join([str(crg.k), "".join(c.value for c in crg.vcolors)] + _rows(crg)) + "\n"


def crg_to_dict(crg: Crg) -> Dict:
    return {"k": crg.k, "vcolors": "".join(c.value for c in crg.vcolors), "ecolors": _rows(crg)}


def crg_from_dict(data: Dict) -> Crg:
    if not isinstance(data, dict):
        raise CrgFormatError("CRG JSON must be an object")
    missing = [key for key in ("k", "vcolors", "ecolors") if key not in data]
    if missing:
        raise CrgFormatError(f"missing field '{missing[0]}'")
    k, vline, rows = data["k"], data["vcolors"], data["ecolors"]
    if not isinstance(k, int) or k < 1:
        raise CrgFormatError(f"field 'k' must be a positive integer, got {k!r}")
    if not isinstance(vline, str) or not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
        raise CrgFormatError("fields 'vcolors' and 'ecolors' must be a string and a list of strings")
    return _from_parts(k, vline, rows)


def read_crg_file(path: str) -> Crg:
    """Read a CRG from a .json file or the text format."""
    with open(path, "r", encoding="utf-8") as f:
        content = f.read()
    if path.endswith(".json"):
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise CrgFormatError(f"invalid JSON: {e.msg}", e.lineno)
        crg = crg_from_dict(data)
    else:
        crg = parse_crg_text(content)
    logger.debug(f"Loaded {crg.k}-vertex CRG from {path}")
    return crg


def write_crg_file(crg: Crg, path: str):
    with open(path, "w", encoding="utf-8") as f:
        if path.endswith(".json"):
            json.dump(crg_to_dict(crg), f, indent=2, sort_keys=True)
            f.write("\n")
        else:
            f.write(emit_crg_text(crg))
