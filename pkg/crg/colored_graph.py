"""
Colored graphs: edge-colored cliques without vertex colors.

A blow-up of a CRG is kept compressed as (base CRG, part sizes); edges inside
a part take the part's vertex color and edges between parts take the base
edge color. Degrees are computed from the part structure without expansion.
"""
import logging
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Dict, List, Optional, Tuple

from config.constants import POINT_TOL
from crg.model import PART_COLOR, Crg, EdgeColor, ProbMass, pair_count, pair_index
from utils.error_handler import PreconditionError
from utils.numeric import Number, zero_of

logger = logging.getLogger(__name__)


def edge_weight(color: EdgeColor, p: Number) -> Number:
    """w_p: white edges weigh p, black 1-p, gray 0."""
    if color is EdgeColor.WHITE:
        return p
    if color is EdgeColor.BLACK:
        return 1 - p
    return zero_of(p)


@dataclass(frozen=True)
class ColoredGraph:
    """
    Either explicit (`size` vertices with flat upper-triangular `ecolors`) or
    compressed (`base` with `part_sizes`). Exactly one representation is set.
    """
    size: int
    ecolors: Optional[Tuple[EdgeColor, ...]] = None
    base: Optional[Crg] = None
    part_sizes: Optional[Tuple[int, ...]] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.is_compressed:
            if self.ecolors is not None:
                raise PreconditionError("a colored graph is either explicit or compressed, not both")
            sizes = tuple(self.part_sizes)
            object.__setattr__(self, "part_sizes", sizes)
            if len(sizes) != self.base.k or any(s < 0 for s in sizes):
                raise PreconditionError(f"part sizes {sizes} do not fit a base with {self.base.k} vertices")
            if sum(sizes) != self.size:
                raise PreconditionError(f"part sizes sum to {sum(sizes)}, not {self.size}")
        else:
            colors = tuple(self.ecolors or ())
            object.__setattr__(self, "ecolors", colors)
            if len(colors) != pair_count(self.size):
                raise PreconditionError(f"expected {pair_count(self.size)} edge colors, got {len(colors)}")

    @classmethod
    def explicit(cls, size: int, ecolors, name: str = "") -> "ColoredGraph":
        return cls(size, tuple(ecolors), None, None, name)

    @classmethod
    def compressed(cls, base: Crg, part_sizes, name: str = "") -> "ColoredGraph":
        sizes = tuple(part_sizes)
        return cls(sum(sizes), None, base, sizes, name)

    @property
    def is_compressed(self) -> bool:
        return self.base is not None

    def _offsets(self) -> List[int]:
        return list(accumulate(self.part_sizes))

    def part_of(self, v: int) -> int:
        """Base vertex whose part contains vertex v (compressed only)."""
        return bisect_right(self._offsets(), v)

    def edge(self, u: int, v: int) -> EdgeColor:
        if not (0 <= u < self.size and 0 <= v < self.size) or u == v:
            raise PreconditionError(f"no edge ({u},{v}) in a colored graph on {self.size} vertices")
        if not self.is_compressed:
            return self.ecolors[pair_index(self.size, u, v)]
        offsets = self._offsets()
        x, y = bisect_right(offsets, u), bisect_right(offsets, v)
        if x == y:
            return PART_COLOR[self.base.vertex(x)]
        return self.base.edge(x, y)

    def expand(self) -> "ColoredGraph":
        """Explicit form; quadratic in size."""
        if not self.is_compressed:
            return self
        parts: List[int] = []
        for x, s in enumerate(self.part_sizes):
            parts.extend([x] * s)

        def color(i: int, j: int) -> EdgeColor:
            x, y = parts[i], parts[j]
            return PART_COLOR[self.base.vertex(x)] if x == y else self.base.edge(x, y)

        return ColoredGraph.explicit(
            self.size, (color(i, j) for i, j in combinations(range(self.size), 2)), self.name)

    def induced(self, vertices) -> "ColoredGraph":
        keep = sorted(set(vertices))
        return ColoredGraph.explicit(len(keep), (self.edge(keep[i], keep[j])
                                                 for i, j in combinations(range(len(keep)), 2)))

    def label(self) -> str:
        if self.name:
            return self.name
        if self.is_compressed:
            return f"{self.base.label()}{list(self.part_sizes)}"
        return f"G{self.size}"

    def __repr__(self) -> str:
        return f"<{self.label()}: {self.size} vertices>"


###############################################################################
#                               BLOW-UPS
###############################################################################

def blowup_uniform(crg: Crg, m: int) -> ColoredGraph:
    """m x K: every part has size m."""
    if m < 1:
        raise PreconditionError(f"blow-up factor must be positive, got {m}")
    return ColoredGraph.compressed(crg, [m] * crg.k, f"{m}x{crg.label()}")


def _floor_share(weight: Number, n: int) -> int:
    if isinstance(weight, Fraction):
        return math.floor(weight * n)
    return math.floor(float(weight) * n + POINT_TOL)


def blowup_mass(crg: Crg, mu: ProbMass, n: int) -> ColoredGraph:
    """K[mu, n]: part x has floor(mu(x) * n) vertices."""
    if mu.k != crg.k:
        raise PreconditionError(f"mass has {mu.k} coordinates, CRG has {crg.k} vertices")
    if n < 1:
        raise PreconditionError(f"blow-up size must be positive, got {n}")
    sizes = [_floor_share(w, n) for w in mu.weights]
    return ColoredGraph.compressed(crg, sizes, f"{crg.label()}[mu,{n}]")


###############################################################################
#                              p-DEGREES
###############################################################################

def _part_degree(graph: ColoredGraph, x: int, p: Number) -> Number:
    base, sizes = graph.base, graph.part_sizes
    total = (sizes[x] - 1) * edge_weight(PART_COLOR[base.vertex(x)], p)
    for y, s in enumerate(sizes):
        if y != x and s:
            total += s * edge_weight(base.edge(x, y), p)
    return total


def p_degrees(graph: ColoredGraph, p: Number) -> List[Number]:
    """d_p of every vertex (compressed: one entry per nonempty part)."""
    if graph.is_compressed:
        return [_part_degree(graph, x, p) for x, s in enumerate(graph.part_sizes) if s]
    degrees = [zero_of(p)] * graph.size
    for (i, j), color in zip(combinations(range(graph.size), 2), graph.ecolors):
        w = edge_weight(color, p)
        degrees[i] += w
        degrees[j] += w
    return degrees


def max_p_degree(graph: ColoredGraph, p: Number) -> Number:
    """Delta_p(G); closed form over parts for compressed graphs."""
    if not 0 <= p <= 1:
        raise PreconditionError(f"p={p} outside [0,1]")
    degrees = p_degrees(graph, p)
    return max(degrees) if degrees else zero_of(p)


###############################################################################
#                       RETAINED-GRAY-EDGES BLOW-UP
###############################################################################

def gray_blowup_report(crg: Crg, mu: ProbMass, n0: int) -> Dict:
    """
    Keep only the gray edges of K and blow every vertex x up into an
    independent set of floor(mu(x) * n0) vertices. Reports the total size N
    against n0 - k < N <= n0, each part's degree against d_G(x) * N - k, and
    the largest part.
    """
    blown = blowup_mass(crg, mu, n0)
    sizes = blown.part_sizes
    total = blown.size
    parts = []
    degree_ok = True
    for x, s in enumerate(sizes):
        gray_mass = sum((mu[y] for y in crg.gray_neighbors(x)), zero_of(mu[x]))
        degree = sum(sizes[y] for y in crg.gray_neighbors(x))
        lower = gray_mass * total - crg.k
        if s and degree < lower:
            degree_ok = False
        parts.append({"vertex": x, "size": s, "degree": degree, "degree_lower_bound": lower})
    nonempty = [entry["degree"] for entry in parts if entry["size"]]
    report = {
        "n0": n0,
        "total": total,
        "size_window_ok": n0 - crg.k < total <= n0,
        "min_degree": min(nonempty) if nonempty else 0,
        "max_part": max(sizes),
        "degree_bounds_ok": degree_ok,
        "parts": parts,
    }
    logger.info(f"Gray blow-up of {crg.label()} at n0={n0}: N={total}, min degree {report['min_degree']}")
    return report
