"""
graph6 ingestion and emission.

Decoding and encoding go through networkx; this module adds the byte-level
validation so malformed input is reported with the offending byte offset.
"""
import logging

import networkx as nx

from graphs.simple_graph import SimpleGraph
from utils.error_handler import Graph6ParseError

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"


def _size_prefix(data: bytes, start: int):
    """Return (n, offset just past the size field)."""
    if len(data) <= start:
        raise Graph6ParseError("missing vertex count", start)
    first = data[start]
    if first < 126:
        return first - 63, start + 1
    if len(data) > start + 1 and data[start + 1] == 126:
        width, begin = 6, start + 2
    else:
        width, begin = 3, start + 1
    if len(data) < begin + width:
        raise Graph6ParseError("truncated long vertex count", len(data))
    n = 0
    for i in range(begin, begin + width):
        n = (n << 6) | (data[i] - 63)
    return n, begin + width


def parse_graph6(text) -> SimpleGraph:
    """Parse one graph6 string (an optional >>graph6<< header is accepted)."""
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = len(HEADER) if data.startswith(HEADER.encode()) else 0

    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise Graph6ParseError(f"byte {data[offset]!r} outside the printable range 63..126", offset)

    n, body = _size_prefix(data, start)
    if n < 1:
        raise Graph6ParseError("graph must have at least one vertex", start)
    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    actual = len(data) - body
    if actual != expected:
        raise Graph6ParseError(f"expected {expected} data bytes for n={n}, found {actual}",
                               body + min(actual, expected))
    pad = expected * 6 - bits
    if pad and expected and (data[-1] - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("non-zero padding bits", len(data) - 1)

    graph = nx.from_graph6_bytes(data[start:])
    logger.debug(f"Parsed graph6 {data[start:]!r} into a graph with {n} vertices")
    return SimpleGraph.from_networkx(graph)


def emit_graph6(graph: SimpleGraph) -> str:
    """Encode a graph as graph6 without header or newline."""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def read_graph6_file(path: str):
    """Read every non-empty line of a graph6 file."""
    graphs = []
    with open(path, "r", encoding="ascii") as f:
        for line in f:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    logger.info(f"Read {len(graphs)} graphs from {path}")
    return graphs
