"""
Output utilities: deterministic JSON and CSV writers shared by every command.
"""
import csv
import io
import json
import logging
import sys
from typing import Any, Dict, Iterable, Optional, Sequence

from utils.numeric import format_number

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ("p", "value", "attainer_ids")


def dumps(data: Any) -> str:
    """JSON with sorted keys, 2-space indent and a trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(data: Any, path: Optional[str] = None):
    """Write to `path`, or to stdout when no path is given."""
    text = dumps(data)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {path}")
    except OSError as e:
        logger.error(f"Failed to write {path}: {e}")
        raise


def _cell(value) -> str:
    formatted = format_number(value)
    return formatted if isinstance(formatted, str) else repr(formatted)


def curve_csv(rows: Iterable[Sequence], metadata: Optional[Dict] = None) -> str:
    """
    CSV text with `p,value,attainer_ids` columns; attainer ids are
    semicolon-joined. Metadata goes first as `# key=value` comment lines.
    """
    buffer = io.StringIO()
    for key, value in sorted((metadata or {}).items()):
        buffer.write(f"# {key}={json.dumps(value, sort_keys=True)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CURVE_COLUMNS)
    for p, value, attainers in rows:
        writer.writerow([_cell(p), _cell(value), ";".join(attainers)])
    return buffer.getvalue()


def write_curve_csv(rows: Iterable[Sequence], path: Optional[str], metadata: Optional[Dict] = None):
    text = curve_csv(rows, metadata)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info(f"Wrote {path}")
