"""
p-core decision.
"""
import logging
from typing import Optional, Tuple

from config.constants import SolveMode
from crg.constructions import delete_vertex, sub_crg
from crg.model import Crg
from solver.qp import GRecord, solve_g
from utils.error_handler import InconsistencyError, PreconditionError
from utils.numeric import Number, strictly_greater

logger = logging.getLogger(__name__)


def core_record(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> GRecord:
    """
    Solve K at p and decide p-coreness two ways: every one-vertex deletion
    must strictly raise g, and the minimizer must be unique with full
    support. The two verdicts must agree.
    """
    if p <= 0 or p >= 1:
        raise PreconditionError(f"p-core is defined for p in (0,1); use is_zero_core/is_one_core at p={p}")
    record = solve_g(crg, p, mode)
    strict = all(
        strictly_greater(solve_g(delete_vertex(crg, v), p, record.mode).g, record.g)
        for v in range(crg.k)
    ) if crg.k > 1 else True
    structural = record.unique and record.full_support
    if strict != structural:
        raise InconsistencyError(
            f"{crg.label()} at p={p}: deletion test says {strict}, minimizer test says {structural}")
    logger.debug(f"{crg.label()} is {'' if strict else 'not '}{p}-core")
    return record.with_core(strict)


def is_p_core(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> bool:
    return core_record(crg, p, mode).p_core


def core_reduction(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> Tuple[Crg, Tuple[int, ...]]:
    """
    A p-core sub-CRG with the same g: start from the minimizer's support and
    drop vertices whose deletion leaves g unchanged. Returns the sub-CRG and
    the original indices it keeps.
    """
    record = solve_g(crg, p, mode)
    kept = list(record.support)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for v in list(kept):
            trial = [u for u in kept if u != v]
            if not strictly_greater(solve_g(sub_crg(crg, trial), p, record.mode).g, record.g):
                kept = trial
                changed = True
                break
    reduced = sub_crg(crg, kept)
    logger.debug(f"{crg.label()} reduces to {len(kept)} vertices at p={p}")
    return reduced, tuple(kept)
