"""
Forbidden families: finite members plus symbolic parametric generators,
instantiated lazily up to a bound.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from config.constants import GeneratorType
from graphs.graph6_io import emit_graph6, parse_graph6
from graphs.invariants import chromatic_number, clique_cover_number
from graphs.simple_graph import (
    SimpleGraph, complement, complete_bipartite, cycle_graph, star_graph,
)
from utils.error_handler import (
    EmptyFamilyError, PreconditionError, SpecFormatError, UnsupportedError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """One parametric family: cycles_ge(m), star(k) = K_{1,k}, complete_bipartite(s,t)."""
    kind: GeneratorType
    params: Tuple[int, ...]

    def __post_init__(self):
        if self.kind is GeneratorType.CYCLES_GE:
            if len(self.params) != 1 or self.params[0] < 3:
                raise PreconditionError(f"cycles_ge requires m >= 3, got {self.params}")
        elif self.kind is GeneratorType.STAR:
            if len(self.params) != 1 or self.params[0] < 1:
                raise PreconditionError(f"star requires k >= 1, got {self.params}")
        elif self.kind is GeneratorType.COMPLETE_BIPARTITE:
            if len(self.params) != 2 or min(self.params) < 1:
                raise PreconditionError(f"complete_bipartite requires s,t >= 1, got {self.params}")

    @property
    def is_infinite(self) -> bool:
        return self.kind is GeneratorType.CYCLES_GE

    def instances(self, bound: int) -> Iterator[SimpleGraph]:
        """Members in increasing order; cycles_ge stops at length `bound`."""
        if self.kind is GeneratorType.CYCLES_GE:
            for j in range(self.params[0], bound + 1):
                yield cycle_graph(j)
        elif self.kind is GeneratorType.STAR:
            yield star_graph(self.params[0])
        else:
            yield complete_bipartite(*self.params)

    def min_chromatic(self) -> int:
        """Every generator has a bipartite member: an even cycle, a star or K_{s,t}."""
        return 2

    def min_clique_cover(self) -> int:
        if self.kind is GeneratorType.CYCLES_GE:
            m = self.params[0]
            return 1 if m == 3 else (m + 1) // 2
        if self.kind is GeneratorType.STAR:
            return self.params[0]
        return max(self.params)

    def to_dict(self) -> Dict:
        if self.kind is GeneratorType.CYCLES_GE:
            return {"type": self.kind.value, "m": self.params[0]}
        if self.kind is GeneratorType.STAR:
            return {"type": self.kind.value, "k": self.params[0]}
        return {"type": self.kind.value, "s": self.params[0], "t": self.params[1]}

    def __str__(self) -> str:
        return f"{self.kind.value}({','.join(str(x) for x in self.params)})"


def cycles_ge(m: int) -> Generator:
    return Generator(GeneratorType.CYCLES_GE, (m,))


def star(k: int) -> Generator:
    return Generator(GeneratorType.STAR, (k,))


def bipartite(s: int, t: int) -> Generator:
    return Generator(GeneratorType.COMPLETE_BIPARTITE, (s, t))


@dataclass(frozen=True)
class FamilySpec:
    """A forbidden family 𝓕; the property is Forb(𝓕)."""
    finite: Tuple[SimpleGraph, ...] = ()
    generators: Tuple[Generator, ...] = ()
    cycle_test_bound: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "finite", tuple(self.finite))
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.finite and not self.generators:
            raise EmptyFamilyError("a forbidden family needs at least one member or generator")
        if self.cycle_test_bound is not None and self.cycle_test_bound < 1:
            raise PreconditionError(f"cycle_test_bound must be positive, got {self.cycle_test_bound}")

    @property
    def has_infinite_generator(self) -> bool:
        return any(g.is_infinite for g in self.generators)

    def members(self, bound: Optional[int] = None) -> Iterator[SimpleGraph]:
        """Finite members first, then generator instances up to `bound`."""
        limit = bound if bound is not None else (self.cycle_test_bound or 0)
        yield from self.finite
        for generator in self.generators:
            yield from generator.instances(limit)

    def contains_anticlique(self) -> bool:
        return any(not g.edges for g in self.finite)

    def contains_clique(self) -> bool:
        if any(g.edge_count == g.n * (g.n - 1) // 2 for g in self.finite):
            return True
        for generator in self.generators:
            if generator.kind is GeneratorType.CYCLES_GE and generator.params[0] == 3:
                return True
            if generator.kind is GeneratorType.STAR and generator.params[0] == 1:
                return True
            if generator.kind is GeneratorType.COMPLETE_BIPARTITE and generator.params == (1, 1):
                return True
        return False

    def to_dict(self) -> Dict:
        data = {
            "forbidden": [emit_graph6(g) for g in self.finite],
            "families": [g.to_dict() for g in self.generators],
        }
        if self.cycle_test_bound is not None:
            data["cycle_test_bound"] = self.cycle_test_bound
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> "FamilySpec":
        if not isinstance(data, dict):
            raise SpecFormatError("spec", "property spec must be a JSON object")
        unknown = set(data) - {"forbidden", "families", "cycle_test_bound"}
        if unknown:
            raise SpecFormatError(sorted(unknown)[0], "unknown field")
        finite = []
        for i, text in enumerate(data.get("forbidden", [])):
            if not isinstance(text, str):
                raise SpecFormatError(f"forbidden[{i}]", "expected a graph6 string")
            finite.append(parse_graph6(text))
        generators = []
        for i, entry in enumerate(data.get("families", [])):
            generators.append(_generator_from_dict(entry, f"families[{i}]"))
        bound = data.get("cycle_test_bound")
        if bound is not None and (not isinstance(bound, int) or bound < 1):
            raise SpecFormatError("cycle_test_bound", "expected a positive integer")
        if not finite and not generators:
            raise SpecFormatError("forbidden", "the family is empty")
        return cls(tuple(finite), tuple(generators), bound)

    def __str__(self) -> str:
        parts = [g.name or emit_graph6(g) for g in self.finite] + [str(g) for g in self.generators]
        return "{" + ", ".join(parts) + "}"


def _generator_from_dict(entry, field_name: str) -> Generator:
    if not isinstance(entry, dict) or "type" not in entry:
        raise SpecFormatError(field_name, "expected an object with a 'type'")
    try:
        kind = GeneratorType(entry["type"])
    except ValueError:
        raise SpecFormatError(f"{field_name}.type", f"unknown family type {entry['type']!r}")
    keys = {"cycles_ge": ("m",), "star": ("k",), "complete_bipartite": ("s", "t")}[kind.value]
    params = []
    for key in keys:
        value = entry.get(key)
        if not isinstance(value, int):
            raise SpecFormatError(f"{field_name}.{key}", "expected an integer")
        params.append(value)
    try:
        return Generator(kind, tuple(params))
    except PreconditionError as e:
        raise SpecFormatError(field_name, str(e))


###############################################################################
#                          FAMILY INVARIANTS
###############################################################################

def family_chi(spec: FamilySpec) -> int:
    """χ(𝓕) = min over members; generators contribute in closed form."""
    values = [chromatic_number(g) for g in spec.finite]
    values += [g.min_chromatic() for g in spec.generators]
    if not values:
        raise EmptyFamilyError("empty family has no chromatic number")
    return min(values)


def family_clique_cover(spec: FamilySpec) -> int:
    """χ̄(𝓕) = min over members of the clique-cover number."""
    values = [clique_cover_number(g) for g in spec.finite]
    values += [g.min_clique_cover() for g in spec.generators]
    if not values:
        raise EmptyFamilyError("empty family has no clique-cover number")
    return min(values)


def complement_family(spec: FamilySpec) -> FamilySpec:
    """
    Family of complements. Single-graph generators (stars, complete bipartite)
    are complemented as graphs; cycles_ge has no supported complement.
    """
    finite: List[SimpleGraph] = [complement(g) for g in spec.finite]
    for generator in spec.generators:
        if generator.is_infinite:
            raise UnsupportedError(f"complement of generator {generator} is not supported")
        finite.extend(complement(g) for g in generator.instances(0))
    return FamilySpec(tuple(finite), (), spec.cycle_test_bound)
