"""
Bounded windows into the set of core CRGs admitting no member of a
forbidden family.

A 0-core CRG is K(w,0) gray-joined with a black part whose edges are white
or gray, so for each white count w the black parts are grown one vertex at
a time and deduplicated by canonical form. A CRG that admits the family
stays admitting it after any vertex is added, so only survivors are
extended. The 1-core side is the color-swapped mirror.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from config.config_manager import bounds_dict, spec_hash
from config.constants import CANONICAL_CAP, DEFAULT_THREADS, CatalogSide
from crg.canonical import canonical_form
from crg.constructions import complement_crg, is_side_core
from crg.crg_io import emit_crg_text, parse_crg_text
from crg.model import Crg, EdgeColor, VertexColor
from embed.graph_embed import family_embeds
from graphs.family import FamilySpec
from solver.core import is_p_core
from utils.error_handler import CrgFormatError, InconsistencyError, PreconditionError, SizeCapError
from utils.numeric import Number, format_number, parse_probability

logger = logging.getLogger(__name__)

Pairs = FrozenSet[Tuple[int, int]]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    crg: Crg
    canonical_key: str

    @property
    def white_count(self) -> int:
        return len(self.crg.white_vertices)

    @property
    def black_count(self) -> int:
        return len(self.crg.black_vertices)


@dataclass(frozen=True)
class Catalog:
    spec: FamilySpec
    side: CatalogSide
    max_white: int
    max_black: int
    entries: Tuple[CatalogEntry, ...] = ()
    property_hash: str = ""
    bounded_verdicts: int = 0
    core_p: Optional[Number] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.property_hash:
            object.__setattr__(self, "property_hash", spec_hash(self.spec))

    @property
    def bounds(self) -> Dict[str, int]:
        return bounds_dict(self.max_white, self.max_black)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def crgs(self) -> List[Crg]:
        return [entry.crg for entry in self.entries]

    def by_id(self, entry_id: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        raise KeyError(entry_id)

    def white_slice(self, whites: int) -> "Catalog":
        """Entries with exactly `whites` white vertices."""
        return replace(self, entries=tuple(e for e in self.entries if e.white_count == whites))

    def to_dict(self) -> Dict:
        return {
            "spec": self.spec.to_dict(),
            "side": self.side.value,
            "bounds": self.bounds,
            "property_hash": self.property_hash,
            "core_p": format_number(self.core_p) if self.core_p is not None else None,
            "bounded_verdicts": self.bounded_verdicts,
            "entries": [
                {"id": e.id, "name": e.crg.name, "canonical_key": e.canonical_key, "crg": emit_crg_text(e.crg)}
                for e in self.entries
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "Catalog":
        try:
            spec = FamilySpec.from_dict(data["spec"])
            side = CatalogSide(data["side"])
            bounds = data["bounds"]
            entries = []
            for item in data["entries"]:
                crg = parse_crg_text(item["crg"]).renamed(item.get("name") or "")
                entries.append(CatalogEntry(item["id"], crg, item["canonical_key"]))
            core_p = data.get("core_p")
            return cls(spec, side, bounds["max_white"], bounds["max_black"], tuple(entries),
                       data["property_hash"], data.get("bounded_verdicts", 0),
                       parse_probability(core_p, "core_p") if core_p is not None else None)
        except (KeyError, TypeError, ValueError) as e:
            raise CrgFormatError(f"malformed catalog: {e}")


###############################################################################
#                              NAMING
###############################################################################

def describe_zero_core(crg: Crg) -> str:
    """K(w,b) when every edge is gray, P_n white-joins by name, else ''."""
    whites, blacks = len(crg.white_vertices), len(crg.black_vertices)
    if all(c is EdgeColor.GRAY for c in crg.ecolors):
        return f"K({whites},{blacks})"
    if whites:
        return ""
    gray = nx.Graph()
    gray.add_nodes_from(range(crg.k))
    gray.add_edges_from(crg.gray_edges)
    if not nx.is_forest(gray) or any(d > 2 for _, d in gray.degree()):
        return ""
    lengths = sorted((len(c) for c in nx.connected_components(gray)), reverse=True)
    return "v".join(f"P{n}" for n in lengths)


def describe(crg: Crg, side: CatalogSide) -> str:
    if side is CatalogSide.ZERO_CORE:
        return describe_zero_core(crg)
    if all(c is EdgeColor.GRAY for c in crg.ecolors):
        return f"K({len(crg.white_vertices)},{len(crg.black_vertices)})"
    mirrored = describe_zero_core(complement_crg(crg))
    return f"co-{mirrored}" if mirrored else ""


###############################################################################
#                             GENERATION
###############################################################################

def _layout(side: CatalogSide):
    """(plain vertex color, structured vertex color, structured edge color)."""
    if side is CatalogSide.ZERO_CORE:
        return VertexColor.WHITE, VertexColor.BLACK, EdgeColor.WHITE
    return VertexColor.BLACK, VertexColor.WHITE, EdgeColor.BLACK


def _assemble(side: CatalogSide, plain: int, inner: int, colored: Pairs) -> Crg:
    """`plain` all-gray vertices first, then `inner` vertices whose colored pairs are given."""
    plain_color, inner_color, edge_color = _layout(side)

    def color(i: int, j: int) -> EdgeColor:
        if i >= plain and (i - plain, j - plain) in colored:
            return edge_color
        return EdgeColor.GRAY

    return Crg.build([plain_color] * plain + [inner_color] * inner, color)


def _extensions(inner: int, colored: Pairs) -> Iterable[Pairs]:
    """Every way of attaching one new inner vertex."""
    for size in range(inner + 1):
        for chosen in combinations(range(inner), size):
            yield colored | frozenset((u, inner) for u in chosen)


def _side_counts(side: CatalogSide, max_white: int, max_black: int) -> Tuple[int, int]:
    """(max plain, max inner) for the side."""
    if side is CatalogSide.ZERO_CORE:
        return max_white, max_black
    return max_black, max_white


def enumerate_catalog(spec: FamilySpec, max_white: int, max_black: int,
                      side: CatalogSide = CatalogSide.ZERO_CORE,
                      threads: int = DEFAULT_THREADS) -> Catalog:
    """
    All side-core CRGs with at most max_white white and max_black black
    vertices, up to isomorphism, into which no member of the family embeds.
    """
    if max_white < 0 or max_black < 0:
        raise PreconditionError(f"bounds must be nonnegative, got ({max_white},{max_black})")
    if max_white + max_black > CANONICAL_CAP:
        raise SizeCapError("catalog window", max_white + max_black, CANONICAL_CAP)

    max_plain, max_inner = _side_counts(side, max_white, max_black)
    found: Dict[str, Crg] = {}
    bounded = 0

    def verdicts(candidates: List[Crg]):
        if threads > 1 and len(candidates) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                return list(pool.map(lambda c: family_embeds(spec, c), candidates))
        return [family_embeds(spec, c) for c in candidates]

    for plain in range(max_plain + 1):
        # surviving inner structures with `inner` vertices
        level: List[Pairs] = [frozenset()]
        inner = 0
        if plain:
            base = _assemble(side, plain, 0, frozenset())
            verdict = family_embeds(spec, base)
            bounded += verdict.bounded
            if verdict.embeds:
                logger.debug(f"{base.label()} admits the family, skipping {plain} plain vertices")
                continue
            found[canonical_form(base)] = base
        while inner < max_inner:
            seen: Dict[str, Tuple[Pairs, Crg]] = {}
            for colored in level:
                for extended in _extensions(inner, colored):
                    crg = _assemble(side, plain, inner + 1, extended)
                    key = canonical_form(crg)
                    if key not in seen:
                        seen[key] = (extended, crg)
            keys = sorted(seen)
            results = verdicts([seen[key][1] for key in keys])
            level = []
            for key, verdict in zip(keys, results):
                bounded += verdict.bounded
                if verdict.embeds:
                    continue
                level.append(seen[key][0])
                found[key] = seen[key][1]
            inner += 1
            logger.debug(f"{side.value} plain={plain} inner={inner}: {len(level)} of {len(keys)} survive")
            if not level:
                break

    entries = []
    ordered = sorted(found.items(), key=lambda item: (item[1].k, len(item[1].white_vertices), item[0]))
    for index, (key, crg) in enumerate(ordered):
        if not is_side_core(crg, side):
            raise InconsistencyError(f"generated {crg.label()} is not {side.value}")
        named = crg.renamed(describe(crg, side) or key)
        entries.append(CatalogEntry(f"c{index:03d}", named, key))
    if bounded:
        logger.warning(f"{bounded} catalog verdicts for {spec} relied on the cycle test bound")
    logger.info(f"Enumerated {len(entries)} {side.value} CRGs for {spec} within ({max_white},{max_black})")
    return Catalog(spec, side, max_white, max_black, tuple(entries), bounded_verdicts=bounded)


def one_core_window(spec: FamilySpec, max_white: int, max_black: int,
                    threads: int = DEFAULT_THREADS) -> Catalog:
    return enumerate_catalog(spec, max_white, max_black, CatalogSide.ONE_CORE, threads)


def filter_p_core(catalog: Catalog, p: Number) -> Catalog:
    """Keep the entries that are p-core."""
    if catalog.side is CatalogSide.ZERO_CORE and not 0 < p <= 0.5:
        raise PreconditionError(f"0-core catalogs are filtered at p in (0,1/2], got {p}")
    if catalog.side is CatalogSide.ONE_CORE and not 0.5 <= p < 1:
        raise PreconditionError(f"1-core catalogs are filtered at p in [1/2,1), got {p}")
    kept = tuple(e for e in catalog.entries if is_p_core(e.crg, p))
    logger.info(f"{len(kept)} of {len(catalog)} entries are {format_number(p)}-core")
    return replace(catalog, entries=kept, core_p=p)

