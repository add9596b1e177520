"""
Checks of the algebraic identities satisfied by minimizers: weighted gray
degrees in p-core CRGs, gray recoloring, the gray-join reciprocal rule, the
white-vertex split of 0-core CRGs and the all-gray lower bound.
"""
import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

from config.constants import SolveMode
from crg.constructions import (
    gray_join, is_zero_core, make_kwb, recolor_edge, white_split,
)
from crg.model import Crg, EdgeColor
from solver.core import core_record
from solver.qp import solve_g
from utils.error_handler import NotCoreError, PreconditionError
from utils.numeric import Number, strictly_greater

logger = logging.getLogger(__name__)


def _open_unit(p: Number):
    if p <= 0 or p >= 1:
        raise PreconditionError(f"p={p} must lie in (0,1)")


def gray_degree_identity_check(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> Dict:
    """
    In a p-core CRG with p <= 1/2: mu(u) = g/p on white vertices, and on black
    vertices d_G(u) = (p-g)/p + ((1-2p)/p) mu(u), where d_G(u) is the mass on
    u's gray neighbours. Returns the largest residual.
    """
    if not 0 < p <= Fraction(1, 2):
        raise PreconditionError(f"p={p} must lie in (0,1/2]")
    record = core_record(crg, p, mode)
    if not record.p_core:
        raise NotCoreError(f"{crg.label()} is not {p}-core")
    p = p if record.mode is SolveMode.EXACT else float(p)
    mu, g = record.minimizer, record.g
    residuals = []
    for u in range(crg.k):
        if u in crg.white_vertices:
            residuals.append(abs(mu[u] - g / p))
        else:
            gray_mass = sum(mu[v] for v in crg.gray_neighbors(u)) if crg.gray_neighbors(u) else 0 * g
            target = (p - g) / p + ((1 - 2 * p) / p) * mu[u]
            residuals.append(abs(gray_mass - target))
    worst = max(residuals)
    logger.debug(f"gray degree identity on {crg.label()} at p={p}: residual {worst}")
    return {"g": g, "residual": worst, "residuals": residuals, "mode": record.mode.value}


def gray_replace_check(crg: Crg, p: Number, edge: Tuple[int, int],
                       mode: Optional[SolveMode] = None) -> Tuple[Number, Number]:
    """Recolor a non-gray edge of a p-core CRG gray; g must drop strictly."""
    u, v = edge
    if crg.edge(u, v) is EdgeColor.GRAY:
        raise PreconditionError(f"edge ({u},{v}) of {crg.label()} is already gray")
    record = core_record(crg, p, mode)
    if not record.p_core:
        raise NotCoreError(f"{crg.label()} is not {p}-core")
    after = solve_g(recolor_edge(crg, edge, EdgeColor.GRAY), p, record.mode).g
    if not strictly_greater(record.g, after):
        logger.warning(f"gray recoloring of ({u},{v}) in {crg.label()} did not lower g: {record.g} -> {after}")
    return record.g, after


def join_identity_check(first: Crg, second: Crg, p: Number, mode: Optional[SolveMode] = None) -> Number:
    """|1/g(K+L) - 1/g(K) - 1/g(L)| for the gray join K+L."""
    _open_unit(p)
    joined = solve_g(gray_join(first, second), p, mode)
    g_first = solve_g(first, p, joined.mode).g
    g_second = solve_g(second, p, joined.mode).g
    return abs(1 / joined.g - 1 / g_first - 1 / g_second)


def white_split_identity_check(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> Number:
    """
    A 0-core CRG is K(w,0) gray-joined with its black part K', so
    1/g_K = w/p + 1/g_K' (g_K = p/w when K' is empty). Returns the residual.
    """
    _open_unit(p)
    if not is_zero_core(crg):
        raise NotCoreError(f"{crg.label()} is not 0-core")
    record = solve_g(crg, p, mode)
    w, black = white_split(crg)
    if black is None:
        return abs(record.g - p / w) if record.mode is SolveMode.EXACT else abs(record.g - float(p) / w)
    g_black = solve_g(black, p, record.mode).g
    pp = p if record.mode is SolveMode.EXACT else float(p)
    return abs(1 / record.g - w / pp - 1 / g_black)


def allgray_check(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> Dict:
    """
    g_K(p) >= g_K(|VW|,|VB|)(p), strictly when K is p-core and has a
    non-gray edge.
    """
    _open_unit(p)
    record = core_record(crg, p, mode)
    bound = solve_g(make_kwb(len(crg.white_vertices), len(crg.black_vertices)), p, record.mode).g
    has_colored_edge = any(c is not EdgeColor.GRAY for c in crg.ecolors)
    holds = not strictly_greater(bound, record.g)
    strict = strictly_greater(record.g, bound)
    expected_strict = bool(record.p_core and has_colored_edge)
    return {
        "g": record.g,
        "g_all_gray": bound,
        "holds": holds,
        "strict": strict,
        "strict_expected": expected_strict,
        "ok": holds and (strict or not expected_strict),
    }
