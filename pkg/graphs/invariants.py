"""
Exact chromatic invariants for the small graphs the pipeline handles.
"""
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List

import networkx as nx

from config.constants import CHROMATIC_CAP
from graphs.simple_graph import SimpleGraph, complement
from utils.error_handler import SizeCapError

logger = logging.getLogger(__name__)


###############################################################################
#                     INDEPENDENCE / CLIQUE NUMBER
###############################################################################

def _adjacency(graph: SimpleGraph) -> Dict[int, FrozenSet[int]]:
    adj = {v: set() for v in range(graph.n)}
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    return {v: frozenset(nbrs) for v, nbrs in adj.items()}


def _low_degree_mis(vertices: FrozenSet[int], adj: Dict[int, FrozenSet[int]]) -> int:
    # every component is a path or a cycle
    seen = set()
    total = 0
    for start in vertices:
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(u for u in adj[v] if u in vertices and u not in comp)
        seen |= comp
        edge_ends = sum(len(adj[v] & comp) for v in comp)
        size = len(comp)
        if edge_ends == 2 * size and size >= 3:
            total += size // 2
        else:
            total += (size + 1) // 2
    return total


def _mis(vertices: FrozenSet[int], adj: Dict[int, FrozenSet[int]]) -> int:
    if not vertices:
        return 0
    degree = {v: len(adj[v] & vertices) for v in vertices}
    pivot = max(vertices, key=lambda v: (degree[v], -v))
    if degree[pivot] <= 2:
        return _low_degree_mis(vertices, adj)
    without = _mis(vertices - {pivot}, adj)
    with_pivot = 1 + _mis(vertices - adj[pivot] - {pivot}, adj)
    return max(without, with_pivot)


def independence_number(graph: SimpleGraph) -> int:
    """Exact α(G) by branching on a maximum-degree vertex."""
    return _mis(frozenset(range(graph.n)), _adjacency(graph))


def clique_number(graph: SimpleGraph) -> int:
    """Exact ω(G) from the maximal cliques networkx enumerates."""
    return max(len(c) for c in nx.find_cliques(graph.to_networkx()))


###############################################################################
#                           CHROMATIC NUMBER
###############################################################################

def _greedy_clique(graph: SimpleGraph, adj) -> List[int]:
    order = sorted(range(graph.n), key=lambda v: -len(adj[v]))
    clique: List[int] = []
    for v in order:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    return clique


def _colorable(graph: SimpleGraph, adj, k: int, seed: List[int]) -> bool:
    colors = [-1] * graph.n
    for i, v in enumerate(seed):
        colors[v] = i
    order = seed + sorted((v for v in range(graph.n) if v not in seed), key=lambda v: -len(adj[v]))

    def backtrack(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        if colors[v] >= 0:
            return backtrack(pos + 1, used)
        forbidden = {colors[u] for u in adj[v] if colors[u] >= 0}
        # a fresh color is symmetric to any other fresh color: try one
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if backtrack(pos + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return backtrack(0, len(seed))


@lru_cache(maxsize=4096)
def _chromatic_cached(graph: SimpleGraph) -> int:
    adj = _adjacency(graph)
    if not graph.edges:
        return 1
    seed = _greedy_clique(graph, adj)
    upper = graph.max_degree() + 1
    for k in range(max(len(seed), 1), upper + 1):
        if _colorable(graph, adj, k, seed):
            return k
    return upper


def chromatic_number(graph: SimpleGraph, cap: int = CHROMATIC_CAP) -> int:
    """
    Exact χ(G) by backtracking, starting from the size of a greedy clique
    (lower bound) and stopping at the greedy Δ+1 bound.
    """
    if graph.n > cap:
        raise SizeCapError("graph for chromatic number", graph.n, cap)
    value = _chromatic_cached(graph)
    logger.debug(f"chromatic number of {graph!r} is {value}")
    return value


def clique_cover_number(graph: SimpleGraph, cap: int = CHROMATIC_CAP) -> int:
    """χ̄(G): minimum number of cliques covering V(G)."""
    return chromatic_number(complement(graph), cap)
