"""
Structural constructions on CRGs: K(w,b), gray paths, joins, dalmatian
substitution, complementation, sub-CRGs and recolorings.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config.constants import CatalogSide
from crg.model import Crg, EdgeColor, VertexColor
from utils.error_handler import EmptyCrgError, NotCoreError, PreconditionError

logger = logging.getLogger(__name__)

W, B = VertexColor.WHITE, VertexColor.BLACK


def make_kwb(w: int, b: int) -> Crg:
    """K(w,b): w white and b black vertices, every edge gray."""
    if w < 0 or b < 0:
        raise PreconditionError(f"K(w,b) needs nonnegative counts, got ({w},{b})")
    if w + b == 0:
        raise EmptyCrgError("K(0,0) has no vertices")
    return Crg.build([W] * w + [B] * b, lambda i, j: EdgeColor.GRAY, f"K({w},{b})")


def make_path_crg(n: int) -> Crg:
    """n black vertices, gray edges {i,i+1}, every other edge white."""
    if n < 1:
        raise PreconditionError(f"a gray path needs n >= 1, got {n}")
    return Crg.build(
        [B] * n,
        lambda i, j: EdgeColor.GRAY if j == i + 1 else EdgeColor.WHITE,
        f"P{n}",
    )


def _join(first: Crg, second: Crg, cross: EdgeColor, symbol: str) -> Crg:
    offset = first.k

    def color(i: int, j: int) -> EdgeColor:
        if j < offset:
            return first.edge(i, j)
        if i >= offset:
            return second.edge(i - offset, j - offset)
        return cross

    return Crg.build(first.vcolors + second.vcolors, color, f"({first.label()}{symbol}{second.label()})")


def gray_join(first: Crg, second: Crg) -> Crg:
    """Disjoint union with every cross edge gray."""
    return _join(first, second, EdgeColor.GRAY, "+")


def white_join(first: Crg, second: Crg) -> Crg:
    """Disjoint union with every cross edge white."""
    return _join(first, second, EdgeColor.WHITE, "v")


def white_join_paths(lengths: Sequence[int]) -> Crg:
    """P_{n1} v P_{n2} v ... in the given order."""
    if not lengths:
        raise EmptyCrgError("white join of no paths")
    result = make_path_crg(lengths[0])
    for n in lengths[1:]:
        result = white_join(result, make_path_crg(n))
    return result.renamed("v".join(f"P{n}" for n in lengths))


def complement_crg(crg: Crg) -> Crg:
    """Swap black and white on vertices and edges; gray stays. An involution."""
    if crg.name.startswith("co-"):
        name = crg.name[3:]
    else:
        name = f"co-{crg.name}" if crg.name else ""
    return Crg(tuple(c.swapped() for c in crg.vcolors), tuple(c.swapped() for c in crg.ecolors), name)


###############################################################################
#                           CORE STRUCTURE
###############################################################################

def is_zero_core(crg: Crg) -> bool:
    """No black edges, and white edges only join black vertices."""
    for (i, j), color in zip(crg.pairs(), crg.ecolors):
        if color is EdgeColor.BLACK:
            return False
        if color is EdgeColor.WHITE and (crg.vertex(i) is W or crg.vertex(j) is W):
            return False
    return True


def is_one_core(crg: Crg) -> bool:
    """No white edges, and black edges only join white vertices."""
    return is_zero_core(complement_crg(crg))


def is_side_core(crg: Crg, side: CatalogSide) -> bool:
    return is_zero_core(crg) if side is CatalogSide.ZERO_CORE else is_one_core(crg)


###############################################################################
#                        SUB-CRGS AND RECOLORING
###############################################################################

def sub_crg(crg: Crg, vertices: Iterable[int]) -> Crg:
    """Induced sub-CRG on the given vertices, kept in increasing order."""
    keep = sorted(set(vertices))
    if not keep:
        raise EmptyCrgError("sub-CRG on no vertices")
    if keep[0] < 0 or keep[-1] >= crg.k:
        raise PreconditionError(f"vertices {keep} outside 0..{crg.k - 1}")
    return Crg.build([crg.vertex(v) for v in keep], lambda i, j: crg.edge(keep[i], keep[j]))


def delete_vertex(crg: Crg, v: int) -> Crg:
    return sub_crg(crg, (u for u in range(crg.k) if u != v))


def recolor_edge(crg: Crg, edge: Tuple[int, int], color: EdgeColor) -> Crg:
    u, v = edge
    target = (min(u, v), max(u, v))
    return Crg.build(crg.vcolors, lambda i, j: color if (i, j) == target else crg.edge(i, j))


def white_split(crg: Crg) -> Tuple[int, Optional[Crg]]:
    """
    For a 0-core CRG return (number of white vertices, sub-CRG on the black
    vertices). The black part is None when there are no black vertices.
    """
    if not is_zero_core(crg):
        raise NotCoreError(f"{crg.label()} is not 0-core")
    blacks = crg.black_vertices
    return len(crg.white_vertices), (sub_crg(crg, blacks) if blacks else None)


###############################################################################
#                              DALMATIANS
###############################################################################

def dalmatian(crg: Crg, ell: int, r: int) -> Crg:
    """
    K^ell(r): the first r white vertices (by index) are each replaced in place
    by ell black vertices joined by white edges. Every copy keeps the replaced
    vertex's edge colors to the rest of K, including to other copies.
    """
    if not is_zero_core(crg):
        raise NotCoreError(f"dalmatian substitution needs a 0-core CRG, {crg.label()} is not")
    whites = crg.white_vertices
    if ell < 1:
        raise PreconditionError(f"dalmatian size must be positive, got {ell}")
    if not 1 <= r <= len(whites):
        raise PreconditionError(f"r={r} outside 1..{len(whites)}")
    replaced = set(whites[:r])

    origin: List[int] = []
    vcolors: List[VertexColor] = []
    for v in range(crg.k):
        copies = ell if v in replaced else 1
        origin.extend([v] * copies)
        vcolors.extend([B if v in replaced else crg.vertex(v)] * copies)

    def color(i: int, j: int) -> EdgeColor:
        a, b = origin[i], origin[j]
        if a == b:
            return EdgeColor.WHITE
        return crg.edge(a, b)

    result = Crg.build(vcolors, color, f"{crg.label()}^{ell}({r})")
    logger.debug(f"dalmatian {result.label()} has {result.k} vertices")
    return result


###############################################################################
#                              RANDOM CRGS
###############################################################################

def random_crg(k: int, rng: np.random.Generator, side: Optional[CatalogSide] = None) -> Crg:
    """A uniformly colored CRG, or one obeying the 0-core/1-core structure."""
    if k < 1:
        raise EmptyCrgError("random CRG needs k >= 1")
    vcolors = [W if rng.integers(2) == 0 else B for _ in range(k)]
    palette = list(EdgeColor)

    def color(i: int, j: int) -> EdgeColor:
        if side is None:
            return palette[int(rng.integers(3))]
        inside = B if side is CatalogSide.ZERO_CORE else W
        allowed = EdgeColor.WHITE if side is CatalogSide.ZERO_CORE else EdgeColor.BLACK
        if vcolors[i] is inside and vcolors[j] is inside and rng.integers(2) == 0:
            return allowed
        return EdgeColor.GRAY

    return Crg.build(vcolors, color)
