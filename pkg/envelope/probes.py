"""
Reports built on top of envelopes: gray-path bounds near 1/4, accumulation
probes, the complement symmetry, and small-p demonstrations.
"""
import logging
import re
from fractions import Fraction
from typing import Dict, Optional, Sequence

from config.config_manager import spec_hash
from config.constants import G_TOL, SMALL_P_REGIME, WITHIN_WINDOW, CatalogSide, SolveMode
from crg.constructions import complement_crg, make_path_crg, white_join_paths
from enumeration.catalog import Catalog, CatalogEntry
from envelope.curves import envelope_point, require_chi
from graphs.family import complement_family
from solver.core import core_reduction
from solver.qp import solve_g, solver_cap
from utils.error_handler import PreconditionError, SizeCapError
from utils.numeric import Number, close, format_number, is_zero, strictly_greater

logger = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)


###############################################################################
#                          GRAY PATHS AT 1/4
###############################################################################

def path_identity_residual(crg, mu, g, p: Number = QUARTER) -> Number:
    """
    |g - (1/4 + (1/4n) sum_{deg 1} mu + (1/2n) sum_{deg 0} mu)| where deg is
    the gray degree and n = |V|. Holds on 1/4-core white joins of gray paths.
    """
    n = crg.k
    one = sum((mu[v] for v in range(n) if len(crg.gray_neighbors(v)) == 1), 0 * g)
    zero = sum((mu[v] for v in range(n) if not crg.gray_neighbors(v)), 0 * g)
    quarter = p if isinstance(g, Fraction) else float(p)
    return abs(g - (quarter + one / (4 * n) + zero / (2 * n)))


def pathbound_check(compositions: Sequence[Sequence[int]], mode: Optional[SolveMode] = SolveMode.EXACT) -> Dict:
    """
    For each white join of gray paths: g(1/4) > 1/4, and the degree identity
    holds on its 1/4-core reduction.
    """
    rows = []
    for lengths in compositions:
        total = sum(lengths)
        if total > solver_cap(mode or SolveMode.EXACT):
            raise SizeCapError("white join of gray paths", total, solver_cap(mode or SolveMode.EXACT))
        crg = white_join_paths(list(lengths))
        record = solve_g(crg, QUARTER, mode)
        reduced, kept = core_reduction(crg, QUARTER, record.mode)
        reduced_record = solve_g(reduced, QUARTER, record.mode)
        residual = path_identity_residual(reduced, reduced_record.minimizer, reduced_record.g)
        exceeds = strictly_greater(record.g, QUARTER if record.mode is SolveMode.EXACT else 0.25)
        identity = is_zero(residual)
        rows.append({
            "paths": list(lengths),
            "name": crg.label(),
            "g": format_number(record.g),
            "exceeds_quarter": exceeds,
            "core_vertices": list(kept),
            "residual": format_number(residual),
            "identity_holds": identity,
        })
        logger.debug(f"{crg.label()}: g(1/4)={record.g}, core {kept}, residual {residual}")
    failed = [r["name"] for r in rows if not (r["exceeds_quarter"] and r["identity_holds"])]
    if failed:
        logger.warning(f"pathbound failed on {len(failed)} path joins: {', '.join(failed)}")
    ok = not failed
    logger.info(f"pathbound over {len(rows)} path joins: {'all' if ok else 'not all'} pass")
    return {"rows": rows, "ok": ok}


def path_upper_bound(n: int, p: Number) -> Number:
    """p - (4p-1)/n + 4p/n^2, the uniform-mass value on P_n."""
    return p - (4 * p - 1) / n + 4 * p / (n * n)


def path_upper_bound_check(n: int, p: Number, mode: Optional[SolveMode] = None) -> Dict:
    if n < 1:
        raise PreconditionError(f"path length must be positive, got {n}")
    record = solve_g(make_path_crg(n), p, mode)
    bound = path_upper_bound(n, p if record.mode is SolveMode.EXACT else float(p))
    holds = not strictly_greater(record.g, bound)
    if not holds:
        logger.warning(f"g(P{n}) = {record.g} exceeds the uniform bound {bound} at p={p}")
    return {"n": n, "p": format_number(p), "g": format_number(record.g), "bound": format_number(bound), "holds": holds}


###############################################################################
#                          ACCUMULATION PROBES
###############################################################################

_PATH_NAME = re.compile(r"^P(\d+)$")


def _path_index(names: Sequence[str]) -> Optional[int]:
    """Length of the attaining gray path, if the attainer is one."""
    indices = [int(m.group(1)) for m in (_PATH_NAME.match(n) for n in names) if m]
    return max(indices) if indices and len(indices) == len(names) else None


def accumulation_probe(catalog: Catalog, p_target: Number, approach: Sequence[Number],
                       mode: Optional[SolveMode] = None) -> Dict:
    """
    Attaining CRGs along a sequence approaching p_target. A changing attainer
    hints that more and more CRGs are needed near p_target; nothing beyond the
    catalog is claimed.
    """
    if not approach:
        raise PreconditionError("empty approach sequence")
    gaps = [float(p) - float(p_target) for p in approach]
    if any(g == 0 for g in gaps) or len({g > 0 for g in gaps}) > 1:
        raise PreconditionError(f"approach must stay on one side of {p_target}")
    if any(abs(b) >= abs(a) for a, b in zip(gaps, gaps[1:])):
        raise PreconditionError(f"approach must move monotonically toward {p_target}")

    names = {e.id: e.crg.label() for e in catalog.entries}
    rows = []
    for p in approach:
        point = envelope_point(catalog.entries, p, mode)
        labels = [names[i] for i in point.attainers]
        rows.append({
            "p": format_number(p),
            "value": format_number(point.value),
            "attainer_ids": list(point.attainers),
            "attainers": labels,
            "path_index": _path_index(labels),
        })
    changes = sum(1 for a, b in zip(rows, rows[1:]) if a["attainer_ids"] != b["attainer_ids"])
    indices = [r["path_index"] for r in rows]
    monotone = None
    if all(i is not None for i in indices):
        monotone = all(b >= a for a, b in zip(indices, indices[1:]))
    report = {
        "p_target": format_number(p_target),
        "rows": rows,
        "changes": changes,
        "stabilized": len(rows) < 2 or rows[-1]["attainer_ids"] == rows[-2]["attainer_ids"],
        "path_index_nondecreasing": monotone,
        "bounds": catalog.bounds,
        "label": WITHIN_WINDOW,
    }
    logger.info(f"accumulation probe toward {p_target}: {changes} attainer changes over {len(rows)} points")
    return report


###############################################################################
#                            SYMMETRY
###############################################################################

def symmetry_check(catalog: Catalog, p_grid: Sequence[Number], mode: Optional[SolveMode] = None) -> Dict:
    """
    Compare the envelope at p with the envelope of the complemented catalog
    at 1-p, and every g_K(p) with g_{co-K}(1-p).
    """
    mirrored_spec = complement_family(catalog.spec)
    mirrored = Catalog(
        mirrored_spec, CatalogSide.ONE_CORE if catalog.side is CatalogSide.ZERO_CORE else CatalogSide.ZERO_CORE,
        catalog.max_black, catalog.max_white,
        tuple(CatalogEntry(e.id, complement_crg(e.crg), e.canonical_key) for e in catalog.entries),
    )
    rows = []
    worst_entry = 0.0
    for p in p_grid:
        q = 1 - p
        for entry, twin in zip(catalog.entries, mirrored.entries):
            a = solve_g(entry.crg, p, mode).g
            b = solve_g(twin.crg, q, mode).g
            worst_entry = max(worst_entry, abs(float(a) - float(b)))
            if isinstance(a, Fraction) and isinstance(b, Fraction) and a != b:
                logger.warning(f"g of {entry.crg.label()} at {p} differs from its complement at {q}")
        here = envelope_point(catalog.entries, p, mode)
        there = envelope_point(mirrored.entries, q, mode)
        rows.append({
            "p": format_number(p),
            "envelope": format_number(here.value),
            "complement_envelope": format_number(there.value),
            "residual": format_number(abs(here.value - there.value)),
            "match": close(here.value, there.value),
        })
    return {
        "rows": rows,
        "max_entry_residual": worst_entry,
        "complement_spec_hash": spec_hash(mirrored_spec),
        "ok": all(r["match"] for r in rows),
        "label": WITHIN_WINDOW,
    }


###############################################################################
#                        SMALL-P DEMONSTRATIONS
###############################################################################

def slope_at_zero_demo(catalog: Catalog, probes: Sequence[Number], mode: Optional[SolveMode] = None) -> Dict:
    """
    envelope(p)/p next to the limiting slope 1/(chi(F)-1). A demonstration
    only; the limit itself is not checked.
    """
    chi = require_chi(catalog.spec)
    target = Fraction(1, chi - 1)
    rows = []
    for p in probes:
        if p <= 0:
            raise PreconditionError(f"probe p={p} must be positive")
        in_regime = float(p) <= SMALL_P_REGIME
        if not in_regime:
            logger.warning(f"probe p={p} lies outside the small-p regime (p <= {SMALL_P_REGIME})")
        point = envelope_point(catalog.entries, p, mode)
        rows.append({
            "p": format_number(p),
            "ratio": format_number(point.value / p),
            "target": format_number(target),
            "attainer_ids": list(point.attainers),
            "in_regime": in_regime,
        })
    return {"rows": rows, "chi": chi, "bounds": catalog.bounds, "label": WITHIN_WINDOW, "demonstration": True}


def zero_regularity_probe(catalog: Catalog, probes: Sequence[Number], mode: Optional[SolveMode] = None) -> Dict:
    """
    Per small p: does the full cataloged envelope equal the q minimand, and
    which entries beat q if not.
    """
    chi = require_chi(catalog.spec)
    sliced = catalog.white_slice(chi - 1)
    if not sliced.entries:
        raise PreconditionError(f"catalog has no entry with {chi - 1} white vertices")
    rows = []
    for p in probes:
        full = envelope_point(catalog.entries, p, mode)
        q = envelope_point(sliced.entries, p, mode)
        beaters = sorted(
            e.id for e in catalog.entries
            if strictly_greater(q.value, solve_g(e.crg, p, mode).g, G_TOL)
        )
        rows.append({
            "p": format_number(p),
            "envelope": format_number(full.value),
            "q": format_number(q.value),
            "equal": close(full.value, q.value),
            "beaters": beaters,
        })
    return {"rows": rows, "chi": chi, "bounds": catalog.bounds, "label": WITHIN_WINDOW}


def path_joins(max_total: int):
    """Every multiset of path lengths with sum at most max_total, as nonincreasing lists."""
    def partitions(total: int, largest: int):
        if total == 0:
            yield []
            return
        for first in range(min(total, largest), 0, -1):
            for rest in partitions(total - first, first):
                yield [first] + rest

    for total in range(1, max_total + 1):
        yield from partitions(total, total)
