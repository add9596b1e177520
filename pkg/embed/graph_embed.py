"""
Graph-to-CRG embeddings F -> K.

phi: V(F) -> V(K) need not be injective. An edge uv of F must land on one
black vertex or on a black/gray edge; a non-edge on one white vertex or on a
white/gray edge. Searched by backtracking with forward checking, variables
taken in descending degree.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from crg.model import Crg, EdgeColor, VertexColor
from graphs.family import FamilySpec
from graphs.invariants import clique_number, independence_number
from graphs.simple_graph import SimpleGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbedResult:
    embeds: bool
    witness: Optional[Tuple[int, ...]] = None

    def to_dict(self):
        return {
            "embeds": self.embeds,
            "witness": [[u, x] for u, x in enumerate(self.witness)] if self.witness else None,
        }


@dataclass(frozen=True)
class FamilyVerdict:
    """Outcome of F -> K over a family; `bounded` marks a negative verdict that relied on the cycle bound."""
    embeds: bool
    member: Optional[SimpleGraph] = None
    witness: Optional[Tuple[int, ...]] = None
    bounded: bool = False
    cycle_bound: Optional[int] = None

    def to_dict(self):
        return {
            "embeds": self.embeds,
            "member": repr(self.member) if self.member is not None else None,
            "witness": [[u, x] for u, x in enumerate(self.witness)] if self.witness else None,
            "bounded": self.bounded,
            "cycle_bound": self.cycle_bound,
        }


def _tables(crg: Crg):
    """allowed[edge?][x][y]: may an F-edge (True) or non-edge (False) land on x,y."""
    k = crg.k
    on_edge = [[False] * k for _ in range(k)]
    on_non_edge = [[False] * k for _ in range(k)]
    for x in range(k):
        on_edge[x][x] = crg.vertex(x) is VertexColor.BLACK
        on_non_edge[x][x] = crg.vertex(x) is VertexColor.WHITE
    for x, y in crg.pairs():
        color = crg.edge(x, y)
        on_edge[x][y] = on_edge[y][x] = color in (EdgeColor.BLACK, EdgeColor.GRAY)
        on_non_edge[x][y] = on_non_edge[y][x] = color in (EdgeColor.WHITE, EdgeColor.GRAY)
    return {True: on_edge, False: on_non_edge}


def passes_counting_bound(graph: SimpleGraph, crg: Crg) -> bool:
    """
    Necessary for F -> K: a black vertex receives a clique and a white vertex
    an independent set, so |V(F)| <= omega(F)|VB| + alpha(F)|VW|.
    """
    blacks, whites = len(crg.black_vertices), len(crg.white_vertices)
    capacity = 0
    if blacks:
        capacity += clique_number(graph) * blacks
    if whites:
        capacity += independence_number(graph) * whites
    return graph.n <= capacity


@lru_cache(maxsize=65536)
def embeds(graph: SimpleGraph, crg: Crg) -> EmbedResult:
    """Decide F -> K and return a witness map when one exists."""
    if not passes_counting_bound(graph, crg):
        logger.debug(f"{graph!r} -/-> {crg.label()}: counting bound")
        return EmbedResult(False)

    tables = _tables(crg)
    adjacency = [set(graph.neighbors(v)) for v in range(graph.n)]
    degrees = graph.degrees()
    order = sorted(range(graph.n), key=lambda v: (-degrees[v], v))
    assignment: List[int] = [-1] * graph.n

    def search(position: int, domains) -> bool:
        if position == len(order):
            return True
        u = order[position]
        for x in domains[u]:
            narrowed = {}
            for w in order[position + 1:]:
                table = tables[w in adjacency[u]]
                remaining = [y for y in domains[w] if table[x][y]]
                if not remaining:
                    break
                narrowed[w] = remaining
            else:
                assignment[u] = x
                if search(position + 1, narrowed):
                    return True
        return False

    found = search(0, {v: list(range(crg.k)) for v in range(graph.n)})
    if found:
        witness = tuple(assignment)
        logger.debug(f"{graph!r} -> {crg.label()} via {witness}")
        return EmbedResult(True, witness)
    logger.debug(f"{graph!r} -/-> {crg.label()}")
    return EmbedResult(False)


def check_embedding_witness(graph: SimpleGraph, crg: Crg, phi: Sequence[int]) -> bool:
    """Replay a map against the definition of F -> K."""
    if len(phi) != graph.n or any(not 0 <= x < crg.k for x in phi):
        return False
    tables = _tables(crg)
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if not tables[graph.has_edge(u, v)][phi[u]][phi[v]]:
                return False
    return True


def cycle_bound(spec: FamilySpec, crg: Crg) -> int:
    """Longest cycle tried: the family's cycle_test_bound, else max(2k^2, 2m) over cycles_ge(m)."""
    if spec.cycle_test_bound is not None:
        return spec.cycle_test_bound
    starts = [g.params[0] for g in spec.generators if g.is_infinite]
    return max([2 * crg.k * crg.k] + [2 * m for m in starts])


def family_embeds(spec: FamilySpec, crg: Crg) -> FamilyVerdict:
    """
    F -> K for some member. Finite members and single-graph generators are
    tried first; cycles_ge(m) is instantiated for m <= j <= B.
    """
    bound = cycle_bound(spec, crg)
    for member in spec.finite:
        result = embeds(member, crg)
        if result.embeds:
            return FamilyVerdict(True, member, result.witness)
    infinite = []
    for generator in spec.generators:
        if generator.is_infinite:
            infinite.append(generator)
            continue
        for member in generator.instances(bound):
            result = embeds(member, crg)
            if result.embeds:
                return FamilyVerdict(True, member, result.witness)
    for generator in infinite:
        for member in generator.instances(bound):
            result = embeds(member, crg)
            if result.embeds:
                return FamilyVerdict(True, member, result.witness)
    if infinite:
        logger.debug(f"{spec} -/-> {crg.label()} with cycles tested up to length {bound}")
        return FamilyVerdict(False, bounded=True, cycle_bound=bound)
    return FamilyVerdict(False)
