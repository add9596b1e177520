"""
Plain graphs used for forbidden families and the distance oracle.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, List, Tuple

import networkx as nx

from utils.error_handler import PreconditionError, FormatError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1 with no loops."""
    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"a graph needs at least one vertex, got n={self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge ({u},{v}) outside 0..{self.n - 1}")
            normalized.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], name: str = "") -> "SimpleGraph":
        return cls(n, frozenset(_norm(u, v) for u, v in edges), name)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, name: str = "") -> "SimpleGraph":
        mapping = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        return cls.from_edges(len(mapping), ((mapping[u], mapping[v]) for u, v in graph.edges()), name)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _norm(u, v) in self.edges

    def neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.n) if self.has_edge(u, v)]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> List[int]:
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return counts

    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return SimpleGraph.from_edges(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def __repr__(self) -> str:
        label = self.name or f"G{self.n}"
        return f"<{label}: n={self.n}, m={len(self.edges)}>"


def complement(graph: SimpleGraph) -> SimpleGraph:
    """Complement on the same vertex set; an involution."""
    edges = [(u, v) for u, v in combinations(range(graph.n), 2) if (u, v) not in graph.edges]
    name = f"co-{graph.name}" if graph.name else ""
    return SimpleGraph.from_edges(graph.n, edges, name)


###############################################################################
#                              GENERATORS
###############################################################################

def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2), f"K{n}")


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(), f"E{n}")


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise PreconditionError(f"cycles need at least 3 vertices, got {n}")
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C{n}")


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def complete_bipartite(s: int, t: int) -> SimpleGraph:
    if s < 1 or t < 1:
        raise PreconditionError(f"K_(s,t) needs s,t >= 1, got ({s},{t})")
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    return SimpleGraph.from_edges(s + t, edges, f"K{s},{t}")


def star_graph(k: int) -> SimpleGraph:
    graph = complete_bipartite(1, k)
    return SimpleGraph(graph.n, graph.edges, f"K1,{k}")


###############################################################################
#                          ADJACENCY-LIST INPUT
###############################################################################

def parse_edge_list(text: str, n: int = None) -> SimpleGraph:
    """
    Parse the fallback format: one "u v" pair per line, 0-indexed.
    Blank lines and lines starting with '#' are ignored.
    """
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"edge list line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"edge list line {lineno}: non-integer vertex in {line!r}")
        if u < 0 or v < 0 or u == v:
            raise FormatError(f"edge list line {lineno}: invalid pair {line!r}")
        edges.append((u, v))
        top = max(top, u, v)
    count = n if n is not None else top + 1
    if count < 1:
        raise FormatError("edge list is empty and no vertex count was given")
    return SimpleGraph.from_edges(count, edges)
