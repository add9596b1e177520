"""
The colored-graph order G ⊑ H: G arises from H by deleting vertices and
recoloring gray edges. Equivalently an injection V(G) -> V(H) under which
every edge of G lands on an edge of the same color or on a gray edge.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from config.constants import EXPLICIT_COLORED_CAP
from crg.colored_graph import ColoredGraph
from crg.model import PART_COLOR, EdgeColor
from graphs.simple_graph import SimpleGraph
from utils.error_handler import SizeCapError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeqResult:
    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    method: str = "explicit"


def graph_as_colored(graph: SimpleGraph) -> ColoredGraph:
    """F as a colored graph: edges black, non-edges white."""
    colors = (EdgeColor.BLACK if graph.has_edge(u, v) else EdgeColor.WHITE
              for u, v in combinations(range(graph.n), 2))
    return ColoredGraph.explicit(graph.n, colors, f"col({graph.name or graph.n})")


def check_colored_witness(small: ColoredGraph, large: ColoredGraph, phi: Sequence[int]) -> bool:
    """Replay an injection against the definition of ⊑."""
    if len(phi) != small.size or len(set(phi)) != len(phi):
        return False
    if any(not 0 <= x < large.size for x in phi):
        return False
    for u, v in combinations(range(small.size), 2):
        if not large.edge(phi[u], phi[v]).accepts(small.edge(u, v)):
            return False
    return True


###############################################################################
#                         PART-LEVEL SHORTCUT
###############################################################################

def _part_map(small: ColoredGraph, large: ColoredGraph) -> Optional[Tuple[int, ...]]:
    """
    Map whole parts of a compressed G into parts of a compressed H without
    splitting any part. Sufficient for ⊑, not necessary.
    """
    g_base, h_base = small.base, large.base
    g_sizes, h_sizes = small.part_sizes, large.part_sizes
    parts = [x for x in range(g_base.k) if g_sizes[x]]
    target: Dict[int, int] = {}
    room = list(h_sizes)

    def fits(x: int, y: int) -> bool:
        if room[y] < g_sizes[x]:
            return False
        if g_sizes[x] > 1 and h_base.vertex(y) is not g_base.vertex(x):
            return False
        for x2, y2 in target.items():
            wanted = g_base.edge(x, x2)
            have = PART_COLOR[h_base.vertex(y)] if y2 == y else h_base.edge(y, y2)
            if not have.accepts(wanted):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(parts):
            return True
        x = parts[i]
        for y in range(h_base.k):
            if fits(x, y):
                target[x] = y
                room[y] -= g_sizes[x]
                if search(i + 1):
                    return True
                room[y] += g_sizes[x]
                del target[x]
        return False

    if not search(0):
        return None
    h_offsets = [sum(h_sizes[:y]) for y in range(h_base.k)]
    used = [0] * h_base.k
    phi: List[int] = []
    for x in range(g_base.k):
        for _ in range(g_sizes[x]):
            y = target[x]
            phi.append(h_offsets[y] + used[y])
            used[y] += 1
    return tuple(phi)


###############################################################################
#                         EXPLICIT BACKTRACKING
###############################################################################

def _explicit_search(small: ColoredGraph, large: ColoredGraph) -> Optional[Tuple[int, ...]]:
    n, m = small.size, large.size
    h_color = [[None] * m for _ in range(m)]
    for a, b in combinations(range(m), 2):
        h_color[a][b] = h_color[b][a] = large.edge(a, b)
    g_color = [[None] * n for _ in range(n)]
    for u, v in combinations(range(n), 2):
        g_color[u][v] = g_color[v][u] = small.edge(u, v)

    # vertices of one part of a compressed H are interchangeable
    if large.is_compressed:
        part = [large.part_of(a) for a in range(m)]
    else:
        part = list(range(m))
    phi: List[int] = []
    used = [False] * m

    def search(u: int) -> bool:
        if u == n:
            return True
        tried_parts = set()
        for a in range(m):
            if used[a] or part[a] in tried_parts:
                continue
            if all(h_color[phi[v]][a].accepts(g_color[v][u]) for v in range(u)):
                tried_parts.add(part[a])
                used[a] = True
                phi.append(a)
                if search(u + 1):
                    return True
                phi.pop()
                used[a] = False
        return False

    return tuple(phi) if search(0) else None


def _part_search(small: ColoredGraph, large: ColoredGraph) -> Optional[Tuple[int, ...]]:
    """
    Exact ⊑ into a compressed H without expanding it: assign each vertex of
    G to a part of H with room left. Vertices sharing a part see the part's
    vertex color between them.
    """
    n, base = small.size, large.base
    g_color = [[None] * n for _ in range(n)]
    for u, v in combinations(range(n), 2):
        g_color[u][v] = g_color[v][u] = small.edge(u, v)
    room = list(large.part_sizes)
    assigned: List[int] = []

    def have(x: int, y: int) -> EdgeColor:
        return PART_COLOR[base.vertex(x)] if x == y else base.edge(x, y)

    def search(u: int) -> bool:
        if u == n:
            return True
        for y in range(base.k):
            if not room[y]:
                continue
            if all(have(assigned[v], y).accepts(g_color[v][u]) for v in range(u)):
                room[y] -= 1
                assigned.append(y)
                if search(u + 1):
                    return True
                assigned.pop()
                room[y] += 1
        return False

    if not search(0):
        return None
    offsets = [sum(large.part_sizes[:y]) for y in range(base.k)]
    used = [0] * base.k
    phi: List[int] = []
    for y in assigned:
        phi.append(offsets[y] + used[y])
        used[y] += 1
    return tuple(phi)


def colored_leq(small: ColoredGraph, large: ColoredGraph, cap: int = EXPLICIT_COLORED_CAP) -> LeqResult:
    """
    Decide G ⊑ H, with a witness injection when it holds. A compressed H
    larger than `cap` is searched part by part, which needs G itself to have
    at most `cap` vertices; an explicit H larger than `cap` is refused.
    """
    if small.size > large.size:
        return LeqResult(False, method="size")
    if small.size == 0:
        return LeqResult(True, (), method="size")
    if small.is_compressed and large.is_compressed:
        phi = _part_map(small, large)
        if phi is not None:
            logger.debug(f"{small.label()} ⊑ {large.label()} by part matching")
            return LeqResult(True, phi, method="parts")
    if large.size > cap:
        if not large.is_compressed or small.size > cap:
            raise SizeCapError("colored graph for explicit ⊑ search", max(small.size, large.size), cap)
        phi = _part_search(small, large)
        logger.debug(f"{small.label()} {'⊑' if phi else 'not ⊑'} {large.label()} by part search")
        return LeqResult(phi is not None, phi, method="part-search")
    phi = _explicit_search(small, large)
    logger.debug(f"{small.label()} {'⊑' if phi else 'not ⊑'} {large.label()}")
    return LeqResult(phi is not None, phi)
