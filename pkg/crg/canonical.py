"""
Canonical labeling of small CRGs.

Vertices are first split into cells by iterated color refinement (vertex
color, then the multiset of (edge color, neighbour cell)); the canonical key
is the lexicographically least edge string over all orderings that respect
the cell order. Orderings are built one position at a time with prefix
pruning, and twin vertices are tried only once per position.
"""
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from config.constants import CANONICAL_CAP
from crg.model import Crg
from utils.error_handler import SizeCapError

logger = logging.getLogger(__name__)


def _refine(crg: Crg) -> List[List[int]]:
    k = crg.k
    cell = [0] * k
    signature = [(crg.vertex(v).value,) for v in range(k)]
    count = 0
    while True:
        ranks = {sig: i for i, sig in enumerate(sorted(set(signature)))}
        cell = [ranks[sig] for sig in signature]
        if len(ranks) == count:
            break
        count = len(ranks)
        signature = [
            (cell[v], tuple(sorted((crg.edge(v, u).value, cell[u]) for u in range(k) if u != v)))
            for v in range(k)
        ]
    cells: List[List[int]] = [[] for _ in range(count)]
    for v in range(k):
        cells[cell[v]].append(v)
    return cells


def _twins(crg: Crg) -> List[List[bool]]:
    k = crg.k
    table = [[False] * k for _ in range(k)]
    for u in range(k):
        for v in range(u + 1, k):
            if crg.vertex(u) is not crg.vertex(v):
                continue
            if all(crg.edge(u, w) is crg.edge(v, w) for w in range(k) if w not in (u, v)):
                table[u][v] = table[v][u] = True
    return table


def _best_order(crg: Crg) -> Tuple[Tuple[int, ...], str]:
    cells = _refine(crg)
    slots = [c for c in cells for _ in c]
    twins = _twins(crg)
    k = crg.k
    best_key = [None]
    best_order = [None]
    order: List[int] = []
    used = [False] * k

    def search(prefix: str, beaten: bool):
        j = len(order)
        if j == k:
            if best_key[0] is None or prefix < best_key[0]:
                best_key[0] = prefix
                best_order[0] = tuple(order)
            return
        tried: List[int] = []
        for c in slots[j]:
            if used[c] or any(twins[c][t] for t in tried):
                continue
            tried.append(c)
            extended = prefix + "".join(crg.edge(order[i], c).value for i in range(j))
            still_beaten = beaten
            if best_key[0] is not None and not beaten:
                reference = best_key[0][:len(extended)]
                if extended > reference:
                    continue
                still_beaten = extended < reference
            order.append(c)
            used[c] = True
            search(extended, still_beaten)
            used[c] = False
            order.pop()

    search("", False)
    return best_order[0], best_key[0]


@lru_cache(maxsize=65536)
def _canonical(crg: Crg) -> Tuple[Tuple[int, ...], str]:
    order, edges = _best_order(crg)
    vertices = "".join(crg.vertex(v).value for v in order)
    return order, f"{vertices}|{edges}"


def canonical_form(crg: Crg, cap: int = CANONICAL_CAP) -> str:
    """Key equal for two CRGs exactly when they are isomorphic."""
    if crg.k > cap:
        raise SizeCapError("CRG for canonical form", crg.k, cap)
    return _canonical(crg)[1]


def canonical_order(crg: Crg, cap: int = CANONICAL_CAP) -> Tuple[int, ...]:
    if crg.k > cap:
        raise SizeCapError("CRG for canonical form", crg.k, cap)
    return _canonical(crg)[0]


def relabel(crg: Crg, order: Sequence[int]) -> Crg:
    """Vertex i of the result is vertex order[i] of crg."""
    return Crg.build([crg.vertex(v) for v in order], lambda i, j: crg.edge(order[i], order[j]), crg.name)


def canonical_crg(crg: Crg) -> Crg:
    return relabel(crg, canonical_order(crg))


def crg_isomorphic(first: Crg, second: Crg) -> bool:
    if first.k != second.k or sorted(first.vcolors, key=lambda c: c.value) != sorted(second.vcolors, key=lambda c: c.value):
        return False
    if sorted(c.value for c in first.ecolors) != sorted(c.value for c in second.ecolors):
        return False
    return canonical_form(first) == canonical_form(second)
