"""
Exhaustive edit distance at toy scale: dist(G, H) and dist(G, Forb(F)) by
searching every edge set on V(G), independently of the CRG machinery.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from functools import lru_cache
from threading import Lock
from typing import Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from config.constants import DENSITY_CAP, DIST_CAP, FREE_MEMO_SPECS
from graphs.family import FamilySpec
from graphs.graph6_io import emit_graph6
from graphs.simple_graph import SimpleGraph
from utils.error_handler import PreconditionError, SizeCapError, TrivialPropertyError
from utils.numeric import Number, format_number

logger = logging.getLogger(__name__)


def dist_graphs(first: SimpleGraph, second: SimpleGraph) -> Fraction:
    """|E(G) symmetric-difference E(H)| / C(n,2) for graphs on the same vertex set."""
    if first.n != second.n:
        raise PreconditionError(f"graphs have {first.n} and {second.n} vertices")
    pairs = first.n * (first.n - 1) // 2
    if pairs == 0:
        return Fraction(0)
    return Fraction(len(first.edges ^ second.edges), pairs)


###############################################################################
#                        ISOMORPHISM-CLASS MEMO
###############################################################################

class IsoMemo:
    """
    Values keyed by isomorphism class: a Weisfeiler-Lehman hash picks the
    bucket, nx.is_isomorphic finds the class inside it. Safe to share across
    threads; two threads may both compute a missing class.
    """

    def __init__(self):
        self._buckets: Dict[str, List[Tuple[nx.Graph, object]]] = {}
        self._lock = Lock()
        self.hits = 0
        self.misses = 0

    def _find(self, graph: nx.Graph, key: str):
        with self._lock:
            bucket = list(self._buckets.get(key, ()))
        for representative, value in bucket:
            if nx.is_isomorphic(representative, graph):
                return True, value
        return False, None

    def get_or_compute(self, graph: nx.Graph, compute):
        key = nx.weisfeiler_lehman_graph_hash(graph)
        found, value = self._find(graph, key)
        if found:
            with self._lock:
                self.hits += 1
            return value
        value = compute(graph)
        with self._lock:
            self.misses += 1
            self._buckets.setdefault(key, []).append((graph, value))
        return value

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())


@lru_cache(maxsize=FREE_MEMO_SPECS)
def _memo_for(spec: FamilySpec) -> IsoMemo:
    """One freeness memo per family; the least recently used family is dropped."""
    return IsoMemo()


def _free(graph: nx.Graph, spec: FamilySpec) -> bool:
    n = graph.number_of_nodes()
    for member in spec.members(bound=n):
        if member.n > n:
            continue
        # GraphMatcher.subgraph_is_isomorphic tests induced subgraphs
        if GraphMatcher(graph, member.to_networkx()).subgraph_is_isomorphic():
            return False
    return True


def is_family_free(graph: SimpleGraph, spec: FamilySpec) -> bool:
    """True when no member of the family is an induced subgraph of G."""
    return _memo_for(spec).get_or_compute(graph.to_networkx(), lambda g: _free(g, spec))


###############################################################################
#                         DISTANCE TO A PROPERTY
###############################################################################

def dist_to_property(graph: SimpleGraph, spec: FamilySpec, cap: int = DIST_CAP) -> Fraction:
    """
    min dist(G, H) over F-free H on V(G). Edit sets are tried in increasing
    size, so the first F-free graph found is optimal.
    """
    if graph.n > cap:
        raise SizeCapError("graph for exhaustive distance", graph.n, cap)
    pairs = list(combinations(range(graph.n), 2))
    edges = set(graph.edges)
    for size in range(len(pairs) + 1):
        for flips in combinations(pairs, size):
            candidate = SimpleGraph(graph.n, frozenset(edges.symmetric_difference(flips)))
            if is_family_free(candidate, spec):
                distance = Fraction(size, len(pairs)) if pairs else Fraction(0)
                logger.debug(f"{graph!r} is {size} edits from Forb({spec})")
                return distance
    raise TrivialPropertyError(f"no graph on {graph.n} vertices avoids {spec}")


###############################################################################
#                         DENSITY SAMPLES
###############################################################################

@dataclass(frozen=True)
class DensitySample:
    """max dist(G, Forb(F)) over n-vertex graphs with floor(p C(n,2)) edges; a finite-n sample only."""
    n: int
    p: Number
    edges: int
    max_dist: Fraction
    argmax: Optional[SimpleGraph]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "p": format_number(self.p),
            "edges": self.edges,
            "max_dist": format_number(self.max_dist),
            "argmax_graph6": emit_graph6(self.argmax) if self.argmax is not None else None,
            "asymptotic": False,
        }


def _edge_target(n: int, p: Number) -> int:
    pairs = n * (n - 1) // 2
    if isinstance(p, (Fraction, int)):
        return math.floor(Fraction(p) * pairs)
    return math.floor(p * pairs + 1e-12)


def graphs_with_edges(n: int, m: int) -> List[SimpleGraph]:
    """One representative per isomorphism class of n-vertex graphs with m edges."""
    seen = IsoMemo()
    representatives = []
    for chosen in combinations(combinations(range(n), 2), m):
        graph = SimpleGraph(n, frozenset(chosen))
        nxg = graph.to_networkx()
        if seen.get_or_compute(nxg, lambda g: len(representatives)) == len(representatives):
            representatives.append(graph)
    return representatives


def max_dist_at_density(n: int, p: Number, spec: FamilySpec, cap: int = DENSITY_CAP) -> DensitySample:
    if n > cap:
        raise SizeCapError("graph order for the density sample", n, cap)
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if not 0 <= p <= 1:
        raise PreconditionError(f"p={p} outside [0,1]")
    m = _edge_target(n, p)
    best, argmax = Fraction(-1), None
    classes = graphs_with_edges(n, m)
    for graph in classes:
        value = dist_to_property(graph, spec)
        if value > best:
            best, argmax = value, graph
    logger.info(f"max distance over {len(classes)} classes with n={n}, m={m}: {best}")
    return DensitySample(n, p, m, best, argmax)
