"""
Colored regularity graphs and probability masses on their vertices.

Edge colors are stored in a flat upper-triangular tuple indexed by
(min, max), so two CRGs with the same coloring compare and hash equal.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, List, Sequence, Tuple

from config.constants import MASS_TOL
from utils.error_handler import EmptyCrgError, PreconditionError

logger = logging.getLogger(__name__)


class VertexColor(Enum):
    WHITE = "W"
    BLACK = "B"

    def swapped(self) -> "VertexColor":
        return VertexColor.BLACK if self is VertexColor.WHITE else VertexColor.WHITE


class EdgeColor(Enum):
    WHITE = "w"
    BLACK = "b"
    GRAY = "g"

    def swapped(self) -> "EdgeColor":
        if self is EdgeColor.WHITE:
            return EdgeColor.BLACK
        if self is EdgeColor.BLACK:
            return EdgeColor.WHITE
        return EdgeColor.GRAY

    def accepts(self, other: "EdgeColor") -> bool:
        """Gray accepts every color; white and black only themselves."""
        return self is EdgeColor.GRAY or self is other


# vertex color and the edge color it behaves as inside a blow-up part
PART_COLOR = {VertexColor.WHITE: EdgeColor.WHITE, VertexColor.BLACK: EdgeColor.BLACK}


def pair_count(k: int) -> int:
    return k * (k - 1) // 2


def pair_index(k: int, i: int, j: int) -> int:
    """Position of the unordered pair {i, j} in the flat upper triangle."""
    if i == j:
        raise PreconditionError(f"no edge color on the self-pair ({i},{i})")
    if i > j:
        i, j = j, i
    return i * k - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Crg:
    """A clique with black/white vertices and black/white/gray edges."""
    vcolors: Tuple[VertexColor, ...]
    ecolors: Tuple[EdgeColor, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vcolors", tuple(self.vcolors))
        object.__setattr__(self, "ecolors", tuple(self.ecolors))
        if not self.vcolors:
            raise EmptyCrgError("a CRG needs at least one vertex")
        if len(self.ecolors) != pair_count(self.k):
            raise PreconditionError(
                f"expected {pair_count(self.k)} edge colors for k={self.k}, got {len(self.ecolors)}")

    @classmethod
    def build(cls, vcolors: Sequence[VertexColor],
              color_of: Callable[[int, int], EdgeColor], name: str = "") -> "Crg":
        """Build from a color function called once per pair (i < j)."""
        k = len(vcolors)
        return cls(tuple(vcolors), tuple(color_of(i, j) for i, j in combinations(range(k), 2)), name)

    @property
    def k(self) -> int:
        return len(self.vcolors)

    def vertex(self, v: int) -> VertexColor:
        return self.vcolors[v]

    def edge(self, u: int, v: int) -> EdgeColor:
        return self.ecolors[pair_index(self.k, u, v)]

    def pairs(self) -> Iterator[Tuple[int, int]]:
        return combinations(range(self.k), 2)

    @property
    def white_vertices(self) -> List[int]:
        return [v for v, c in enumerate(self.vcolors) if c is VertexColor.WHITE]

    @property
    def black_vertices(self) -> List[int]:
        return [v for v, c in enumerate(self.vcolors) if c is VertexColor.BLACK]

    def edges_of(self, color: EdgeColor) -> List[Tuple[int, int]]:
        return [(i, j) for (i, j), c in zip(self.pairs(), self.ecolors) if c is color]

    @property
    def white_edges(self) -> List[Tuple[int, int]]:
        return self.edges_of(EdgeColor.WHITE)

    @property
    def black_edges(self) -> List[Tuple[int, int]]:
        return self.edges_of(EdgeColor.BLACK)

    @property
    def gray_edges(self) -> List[Tuple[int, int]]:
        return self.edges_of(EdgeColor.GRAY)

    def gray_neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.k) if u != v and self.edge(u, v) is EdgeColor.GRAY]

    def renamed(self, name: str) -> "Crg":
        return Crg(self.vcolors, self.ecolors, name)

    def label(self) -> str:
        return self.name or f"CRG[{''.join(c.value for c in self.vcolors)}|{''.join(c.value for c in self.ecolors)}]"

    def __repr__(self) -> str:
        return f"<{self.label()}>"


@dataclass(frozen=True)
class ProbMass:
    """A probability mass on V(K); Fractions sum to exactly 1, floats within MASS_TOL."""
    weights: Tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise PreconditionError("a probability mass needs at least one coordinate")
        if any(w < 0 for w in self.weights):
            raise PreconditionError(f"negative weight in {self.weights}")
        total = sum(self.weights)
        if self.is_exact:
            if total != 1:
                raise PreconditionError(f"weights sum to {total}, not 1")
        elif abs(float(total) - 1.0) > MASS_TOL * max(1, len(self.weights)):
            raise PreconditionError(f"weights sum to {float(total)!r}, not 1")

    @classmethod
    def uniform(cls, k: int, exact: bool = True) -> "ProbMass":
        if exact:
            return cls(tuple(Fraction(1, k) for _ in range(k)))
        return cls(tuple(1.0 / k for _ in range(k)))

    @classmethod
    def normalized(cls, raw: Sequence) -> "ProbMass":
        """Scale nonnegative weights to sum 1 (exact when all are Fractions or ints)."""
        if all(isinstance(w, (int, Fraction)) for w in raw):
            values = [Fraction(w) for w in raw]
        else:
            values = [float(w) for w in raw]
        total = sum(values)
        if total <= 0:
            raise PreconditionError("cannot normalize a zero mass")
        return cls(tuple(w / total for w in values))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(w, Fraction) for w in self.weights)

    @property
    def k(self) -> int:
        return len(self.weights)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    def __getitem__(self, i: int):
        return self.weights[i]

    def __len__(self) -> int:
        return len(self.weights)
