"""
Lower envelopes of g_K(p) over a catalog: an upper bound on the edit
distance function that is only as good as the window it was computed from.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from config.constants import (
    CHANGEPOINT_WIDTH, CONCAVITY_TOL, DEFAULT_GRID_POINTS, DEFAULT_THREADS, WITHIN_WINDOW,
    CatalogSide, SolveMode,
)
from crg.constructions import make_kwb, make_path_crg
from enumeration.catalog import Catalog, CatalogEntry, enumerate_catalog
from graphs.family import FamilySpec, family_chi
from solver.qp import solve_g
from utils.error_handler import InconsistencyError, PreconditionError
from utils.numeric import Number, close, format_number

logger = logging.getLogger(__name__)

# default black bound for q_curve's white slice
Q_CURVE_MAX_BLACK = 4


@dataclass(frozen=True)
class EnvelopePoint:
    p: Number
    value: Number
    attainers: Tuple[str, ...]


@dataclass(frozen=True)
class EnvelopeCurve:
    points: Tuple[EnvelopePoint, ...]
    changepoints: Tuple[float, ...] = ()
    bounds: Dict[str, int] = field(default_factory=dict)
    property_hash: str = ""
    names: Dict[str, str] = field(default_factory=dict)
    concavity_violation: float = 0.0
    label: str = WITHIN_WINDOW

    @property
    def grid(self) -> List[Number]:
        return [pt.p for pt in self.points]

    @property
    def values(self) -> List[Number]:
        return [pt.value for pt in self.points]

    @property
    def attainers(self) -> List[Tuple[str, ...]]:
        return [pt.attainers for pt in self.points]

    def value_at(self, p: Number) -> Number:
        for pt in self.points:
            if pt.p == p:
                return pt.value
        raise KeyError(p)

    def attainer_names(self, index: int) -> List[str]:
        return [self.names.get(i, i) for i in self.points[index].attainers]

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "bounds": self.bounds,
            "spec_hash": self.property_hash,
            "points": [
                {"p": format_number(pt.p), "value": format_number(pt.value), "attainer_ids": list(pt.attainers)}
                for pt in self.points
            ],
            "changepoints": [format_number(c) for c in self.changepoints],
            "names": dict(sorted(self.names.items())),
            "concavity_violation": format_number(self.concavity_violation),
        }


def uniform_grid(points: int = DEFAULT_GRID_POINTS, exact: bool = False, upper: Number = Fraction(1, 2)) -> List[Number]:
    """`points` evenly spaced values ending at `upper`, excluding 0."""
    if points < 1:
        raise PreconditionError(f"grid needs at least one point, got {points}")
    grid = [Fraction(i, points) * Fraction(upper) for i in range(1, points + 1)]
    return grid if exact else [float(p) for p in grid]


def envelope_point(entries: Sequence[CatalogEntry], p: Number, mode: Optional[SolveMode]) -> EnvelopePoint:
    values = [(entry, solve_g(entry.crg, p, mode).g) for entry in entries]
    best = min(value for _, value in values)
    tied = sorted((entry for entry, value in values if close(value, best)), key=lambda e: e.canonical_key)
    return EnvelopePoint(p, best, tuple(entry.id for entry in tied))


def _bisect(entries: Sequence[CatalogEntry], left: EnvelopePoint, right: EnvelopePoint) -> float:
    lo, hi = float(left.p), float(right.p)
    while hi - lo > CHANGEPOINT_WIDTH:
        mid = (lo + hi) / 2
        if envelope_point(entries, mid, SolveMode.FLOAT).attainers == left.attainers:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def concavity_violation(grid: Sequence[Number], values: Sequence[Number]) -> float:
    """Largest amount by which a value falls below the chord of its neighbours."""
    worst = 0.0
    for i in range(1, len(grid) - 1):
        x0, x1, x2 = float(grid[i - 1]), float(grid[i]), float(grid[i + 1])
        y0, y1, y2 = float(values[i - 1]), float(values[i]), float(values[i + 1])
        chord = y0 + (y2 - y0) * (x1 - x0) / (x2 - x0)
        worst = max(worst, chord - y1)
    return worst


def envelope(catalog: Catalog, grid: Sequence[Number], mode: Optional[SolveMode] = None,
             threads: int = DEFAULT_THREADS, refine: bool = True) -> EnvelopeCurve:
    """
    Pointwise minimum of g_K over the catalog. Ties are reported as the full
    set of ids ordered by canonical key; between grid points whose attainer
    sets differ the switch is located by bisection.
    """
    if not catalog.entries:
        raise PreconditionError("envelope of an empty catalog")
    if any(not 0 < p < 1 for p in grid):
        raise PreconditionError("grid points must lie in (0,1)")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise PreconditionError("grid must be strictly increasing")

    entries = catalog.entries
    if threads > 1 and len(grid) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            points = list(pool.map(lambda p: envelope_point(entries, p, mode), grid))
    else:
        points = [envelope_point(entries, p, mode) for p in grid]

    changepoints = []
    if refine:
        for left, right in zip(points, points[1:]):
            if left.attainers != right.attainers:
                changepoints.append(_bisect(entries, left, right))
    violation = concavity_violation(grid, [pt.value for pt in points])
    if violation > CONCAVITY_TOL:
        logger.warning(f"envelope is not concave within {CONCAVITY_TOL}: violation {violation}")
    logger.info(f"Envelope over {len(entries)} CRGs at {len(grid)} points: {len(changepoints)} changepoints")
    return EnvelopeCurve(
        tuple(points), tuple(changepoints), catalog.bounds, catalog.property_hash,
        {e.id: e.crg.label() for e in entries}, violation,
    )


###############################################################################
#                          DERIVED CURVES
###############################################################################

def require_chi(spec: FamilySpec) -> int:
    if spec.contains_anticlique():
        raise PreconditionError(f"{spec} contains an anti-clique")
    chi = family_chi(spec)
    if chi < 2:
        raise PreconditionError(f"{spec} has chromatic number {chi}")
    return chi


def q_curve(spec: FamilySpec, p_grid: Sequence[Number], catalog: Optional[Catalog] = None,
            max_black: int = Q_CURVE_MAX_BLACK, mode: Optional[SolveMode] = None,
            threads: int = DEFAULT_THREADS) -> EnvelopeCurve:
    """
    Envelope over the cataloged 0-core CRGs with exactly chi(F)-1 white
    vertices, the minimand that governs small p.
    """
    chi = require_chi(spec)
    if catalog is None:
        catalog = enumerate_catalog(spec, chi - 1, max_black, CatalogSide.ZERO_CORE, threads)
    sliced = catalog.white_slice(chi - 1)
    logger.info(f"q curve for {spec}: {len(sliced)} CRGs with {chi - 1} white vertices")
    return envelope(sliced, p_grid, mode, threads)


def ed_upper_bound_chi(spec: FamilySpec, p: Number, catalog: Optional[Catalog] = None) -> Number:
    """
    p/(chi(F)-1), the value of K(chi-1,0). When a catalog is given its
    envelope at p is checked against the bound.
    """
    chi = require_chi(spec)
    bound = p / (chi - 1) if isinstance(p, Fraction) else float(p) / (chi - 1)
    if catalog is not None and catalog.entries:
        value = envelope_point(catalog.entries, p, None).value
        if float(value) > float(bound) + 1e-10:
            raise InconsistencyError(f"envelope {value} exceeds p/(chi-1) = {bound} at p={p}")
    return bound


def path_catalog(spec: FamilySpec, n_max: int) -> Catalog:
    """{K(1,0)} together with the gray paths P_1..P_n_max."""
    if n_max < 1:
        raise PreconditionError(f"n_max must be positive, got {n_max}")
    entries = [CatalogEntry("c000", make_kwb(1, 0), "W|")]
    for n in range(1, n_max + 1):
        entries.append(CatalogEntry(f"P{n:03d}", make_path_crg(n), f"path:{n:03d}"))
    return Catalog(spec, CatalogSide.ZERO_CORE, 1, n_max, tuple(entries))
