"""
Minimization of <mu, M_K(p) mu> over the probability simplex.

Small CRGs are solved by enumerating every support and solving its
stationarity system. Larger CRGs are split along gray joins and white joins;
gray paths that cannot be split further go through an interval program over
runs of consecutive path vertices.
"""
import dataclasses
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.constants import (
    FEASIBILITY_TOL, G_TOL, POINT_TOL, SOLVER_ENUM_PREFERRED_MAX,
    SOLVER_EXACT_CAP, SOLVER_FLOAT_CAP, SolveMode,
)
from crg.constructions import make_path_crg, sub_crg
from crg.model import Crg, EdgeColor, ProbMass, VertexColor
from solver.linalg import solve_stationary
from solver.matrix import build_matrix, quadratic_form
from utils.error_handler import PreconditionError, SizeCapError
from utils.numeric import Number, format_number, to_mode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GRecord:
    """Outcome of a g_K(p) evaluation."""
    g: Number
    minimizer: ProbMass
    support: Tuple[int, ...]
    unique: bool
    full_support: bool
    mode: SolveMode
    p_core: Optional[bool] = None
    ties: Tuple[ProbMass, ...] = ()
    method: str = "enumeration"

    def with_core(self, flag: bool) -> "GRecord":
        return dataclasses.replace(self, p_core=flag)

    def to_dict(self) -> Dict:
        return {
            "g": format_number(self.g),
            "minimizer": [format_number(w) for w in self.minimizer.weights],
            "support": list(self.support),
            "unique": self.unique,
            "full_support": self.full_support,
            "p_core": self.p_core,
            "mode": self.mode.value,
            "ties": [[format_number(w) for w in t.weights] for t in self.ties],
        }


def solver_cap(mode: SolveMode) -> int:
    return SOLVER_EXACT_CAP if mode is SolveMode.EXACT else SOLVER_FLOAT_CAP


def resolve_mode(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> SolveMode:
    """Exact when p is rational and the CRG is within the exact cap, unless told otherwise."""
    if mode is not None:
        return mode
    if isinstance(p, (Fraction, int)) and crg.k <= SOLVER_EXACT_CAP:
        return SolveMode.EXACT
    return SolveMode.FLOAT


def _tied(a: Number, b: Number, mode: SolveMode) -> bool:
    return a == b if mode is SolveMode.EXACT else abs(a - b) <= G_TOL


def _same_point(a: Sequence, b: Sequence, mode: SolveMode) -> bool:
    if mode is SolveMode.EXACT:
        return tuple(a) == tuple(b)
    return max(abs(float(x) - float(y)) for x, y in zip(a, b)) < POINT_TOL


def _as_mass(weights: Sequence, mode: SolveMode) -> ProbMass:
    if mode is SolveMode.EXACT:
        return ProbMass(tuple(Fraction(w) for w in weights))
    clipped = [max(float(w), 0.0) for w in weights]
    total = sum(clipped)
    return ProbMass(tuple(w / total for w in clipped))


def _support_of(weights: Sequence, mode: SolveMode) -> Tuple[int, ...]:
    if mode is SolveMode.EXACT:
        return tuple(i for i, w in enumerate(weights) if w > 0)
    return tuple(i for i, w in enumerate(weights) if w > POINT_TOL)


###############################################################################
#                          SUPPORT ENUMERATION
###############################################################################

def _stationary_points(matrix: np.ndarray, mode: SolveMode):
    """Every feasible stationary point over every support, as (value, weights)."""
    k = matrix.shape[0]
    points = []
    for size in range(1, k + 1):
        for support in combinations(range(k), size):
            idx = list(support)
            solution = solve_stationary(matrix[np.ix_(idx, idx)])
            if solution is None:
                logger.debug(f"support {support}: singular, skipped")
                continue
            mu_s, g = solution
            if mode is SolveMode.EXACT:
                if any(m < 0 for m in mu_s):
                    continue
                weights = [Fraction(0)] * k
                for i, m in zip(idx, mu_s):
                    weights[i] = m
                points.append((g, weights))
            else:
                if float(np.min(mu_s)) < -FEASIBILITY_TOL:
                    continue
                clipped = np.clip(mu_s, 0.0, None)
                weights = [0.0] * k
                for i, m in zip(idx, clipped / clipped.sum()):
                    weights[i] = float(m)
                points.append((quadratic_form(matrix, weights), weights))
    return points


def _enumeration_record(crg: Crg, p: Number, mode: SolveMode) -> GRecord:
    cap = solver_cap(mode)
    if crg.k > cap:
        raise SizeCapError(f"CRG for the {mode.value} solver", crg.k, cap)
    matrix = build_matrix(crg, p, mode)
    points = _stationary_points(matrix, mode)
    best = min(value for value, _ in points)

    distinct: List[List] = []
    for value, weights in points:
        if _tied(value, best, mode) and not any(_same_point(weights, d, mode) for d in distinct):
            distinct.append(weights)
    distinct.sort(key=lambda w: (-len(_support_of(w, mode)), [-float(x) for x in w]))
    ties = tuple(_as_mass(w, mode) for w in distinct)
    minimizer = ties[0]
    support = _support_of(minimizer.weights, mode)
    if mode is SolveMode.EXACT:
        g = quadratic_form(matrix, minimizer.weights)
    else:
        g = float(best)
    logger.debug(f"{crg.label()} at p={p}: g={g} over {len(points)} stationary points, {len(ties)} minimizers")
    return GRecord(g, minimizer, support, len(ties) == 1, len(support) == crg.k, mode, ties=ties)


###############################################################################
#                          JOIN COMBINATIONS
###############################################################################

@dataclass
class _Block:
    g: Number
    weights: List[Number]
    unique: bool
    runs: Tuple = ()


def _is_zero(value: Number, mode: SolveMode) -> bool:
    return value == 0 if mode is SolveMode.EXACT else abs(value) <= G_TOL


def _positive(value: Number, mode: SolveMode) -> bool:
    return value > 0 if mode is SolveMode.EXACT else value > G_TOL


def _gray_combination(values: Sequence[Number], mode: SolveMode):
    """1/g adds across a gray join. Returns (g, alphas, unique_choice)."""
    zero = [i for i, g in enumerate(values) if _is_zero(g, mode)]
    if zero:
        alphas = [0 * values[0]] * len(values)
        alphas[zero[0]] = 1 + 0 * values[0]
        return values[zero[0]], alphas, len(zero) == 1
    inverse = [1 / g for g in values]
    total = sum(inverse)
    return 1 / total, [x / total for x in inverse], True


def _white_combination(values: Sequence[Number], p: Number, mode: SolveMode):
    """
    Across a white join the value is p + sum alpha_i^2 (g_i - p). With every
    g_i > p the minimizer is alpha_i proportional to 1/(g_i - p); otherwise
    all mass goes to the component with least g_i.
    """
    gaps = [g - p for g in values]
    if all(_positive(c, mode) for c in gaps):
        inverse = [1 / c for c in gaps]
        total = sum(inverse)
        return p + 1 / total, [x / total for x in inverse], True
    least = min(gaps)
    winners = [i for i, c in enumerate(gaps) if _tied(c, least, mode)]
    alphas = [0 * p] * len(values)
    alphas[winners[0]] = 1 + 0 * p
    return values[winners[0]], alphas, len(winners) == 1


def white_join_value(a: Number, b: Number, p: Number) -> Number:
    """min over alpha of alpha^2 a + (1-alpha)^2 b + 2 p alpha (1-alpha)."""
    mode = SolveMode.EXACT if all(isinstance(x, (Fraction, int)) for x in (a, b, p)) else SolveMode.FLOAT
    if mode is SolveMode.EXACT:
        a, b, p = Fraction(a), Fraction(b), Fraction(p)
    return _white_combination([a, b], p, mode)[0]


def _components(crg: Crg, joined: EdgeColor) -> List[List[int]]:
    """Vertex classes of the graph whose edges are the pairs NOT colored `joined`."""
    graph = nx.Graph()
    graph.add_nodes_from(range(crg.k))
    graph.add_edges_from((i, j) for i, j in crg.pairs() if crg.edge(i, j) is not joined)
    return sorted(sorted(c) for c in nx.connected_components(graph))


def _combine_blocks(parts: List[List[int]], blocks: List[_Block], alphas, k: int, zero) -> List[Number]:
    weights = [zero] * k
    for part, block, alpha in zip(parts, blocks, alphas):
        for v, w in zip(part, block.weights):
            weights[v] = alpha * w
    return weights


###############################################################################
#                          GRAY PATH PROGRAM
###############################################################################

def _gray_path_order(crg: Crg) -> Optional[List[int]]:
    """Vertices in path order when K is all black with a gray Hamiltonian path and white elsewhere."""
    if any(c is VertexColor.WHITE for c in crg.vcolors):
        return None
    if any(c is EdgeColor.BLACK for c in crg.ecolors):
        return None
    gray = nx.Graph()
    gray.add_nodes_from(range(crg.k))
    gray.add_edges_from(crg.gray_edges)
    if gray.number_of_edges() != crg.k - 1 or not nx.is_connected(gray):
        return None
    if max(d for _, d in gray.degree()) > 2:
        return None
    start = min(v for v, d in gray.degree() if d <= 1)
    return list(nx.dfs_preorder_nodes(gray, start))


def _run_points(n: int, p: Number, mode: SolveMode):
    """Full-support stationary point of P_L for L = 1..n, or None where infeasible."""
    runs: Dict[int, Optional[Tuple[Number, List[Number]]]] = {}
    for length in range(1, n + 1):
        matrix = build_matrix(make_path_crg(length), p, mode)
        solution = solve_stationary(matrix)
        if solution is None:
            runs[length] = None
            continue
        mu, g = solution
        if mode is SolveMode.EXACT:
            runs[length] = (g, list(mu)) if all(m >= 0 for m in mu) else None
        elif float(np.min(mu)) >= -FEASIBILITY_TOL:
            clipped = np.clip(mu, 0.0, None)
            weights = [float(m) for m in clipped / clipped.sum()]
            runs[length] = (quadratic_form(matrix, weights), weights)
        else:
            runs[length] = None
    return runs


def _evaluate_plan(plan, runs, p, mode):
    """White-join value of a set of runs; returns (value, effective plan, alphas)."""
    values = [runs[length][0] for _, length in plan]
    value, alphas, _ = _white_combination(values, p, mode)
    kept = [(run, a) for run, a in zip(plan, alphas) if not _is_zero(a, mode)]
    return value, tuple(run for run, _ in kept), [a for _, a in kept]


def _keep_best(candidates, mode):
    if not candidates:
        return []
    best = min(value for value, _ in candidates)
    kept = []
    for value, plan in sorted(candidates, key=lambda c: (float(c[0]), c[1])):
        if _tied(value, best, mode) and plan not in [q for _, q in kept]:
            kept.append((value, plan))
    return kept[:2]


def _path_block(order: List[int], p: Number, mode: SolveMode) -> Optional[_Block]:
    n = len(order)
    runs = _run_points(n, p, mode)
    best: List[List] = [[] for _ in range(n + 1)]
    for j in range(1, n + 1):
        candidates = list(best[j - 1])
        for length in range(1, j + 1):
            if runs[length] is None:
                continue
            start = j - length
            prefixes = [()] + ([plan for _, plan in best[start - 1]] if start >= 2 else [])
            for prefix in prefixes:
                value, plan, _ = _evaluate_plan(prefix + ((start, length),), runs, p, mode)
                candidates.append((value, plan))
        best[j] = _keep_best(candidates, mode)
    if not best[n]:
        return None
    value, plan = best[n][0]
    _, plan, alphas = _evaluate_plan(plan, runs, p, mode)
    zero = 0 * p
    weights = [zero] * n
    for (start, length), alpha in zip(plan, alphas):
        for i, w in enumerate(runs[length][1]):
            weights[order[start + i]] = alpha * w
    logger.debug(f"gray path of length {n} at p={p}: runs {plan}, value {value}")
    return _Block(value, weights, len(best[n]) == 1, plan)


###############################################################################
#                          STRUCTURED SOLVE
###############################################################################

def _solve_block(crg: Crg, p: Number, mode: SolveMode) -> Optional[_Block]:
    if crg.k <= SOLVER_ENUM_PREFERRED_MAX:
        record = _enumeration_record(crg, p, mode)
        return _Block(record.g, list(record.minimizer.weights), record.unique)

    zero = 0 * p
    for joined, combine in ((EdgeColor.GRAY, "gray"), (EdgeColor.WHITE, "white")):
        parts = _components(crg, joined)
        if len(parts) < 2:
            continue
        blocks = []
        for part in parts:
            block = _solve_block(sub_crg(crg, part), p, mode)
            if block is None:
                return None
            blocks.append(block)
        values = [b.g for b in blocks]
        if combine == "gray":
            g, alphas, choice = _gray_combination(values, mode)
        else:
            g, alphas, choice = _white_combination(values, p, mode)
        used = [b for b, a in zip(blocks, alphas) if not _is_zero(a, mode)]
        unique = choice and all(b.unique for b in used)
        weights = _combine_blocks(parts, blocks, alphas, crg.k, zero)
        logger.debug(f"{crg.label()}: {combine} join of {len(parts)} parts, g={g}")
        return _Block(g, weights, unique)

    order = _gray_path_order(crg)
    if order is not None:
        return _path_block(order, p, mode)
    if crg.k <= solver_cap(mode):
        record = _enumeration_record(crg, p, mode)
        return _Block(record.g, list(record.minimizer.weights), record.unique)
    return None


@lru_cache(maxsize=16384)
def _solve_cached(crg: Crg, p: Number, mode: SolveMode) -> GRecord:
    if crg.k <= SOLVER_ENUM_PREFERRED_MAX:
        return _enumeration_record(crg, p, mode)
    block = _solve_block(crg, p, mode)
    if block is None:
        raise SizeCapError(f"CRG without join or gray-path structure for the {mode.value} solver",
                           crg.k, solver_cap(mode))
    minimizer = _as_mass(block.weights, mode)
    support = _support_of(minimizer.weights, mode)
    logger.debug(f"{crg.label()} at p={p}: structured g={block.g}")
    return GRecord(block.g, minimizer, support, block.unique, len(support) == crg.k, mode,
                   ties=(minimizer,), method="structured")


def solve_g(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> GRecord:
    """
    g_K(p) with a minimizer. Exact mode needs a rational p; float mode
    compares values within G_TOL and points within POINT_TOL.
    """
    if not 0 <= p <= 1:
        raise PreconditionError(f"p={p} outside [0,1]")
    mode = resolve_mode(crg, p, mode)
    return _solve_cached(crg, to_mode(p, mode), mode)


def g_value(crg: Crg, p: Number, mode: Optional[SolveMode] = None) -> Number:
    return solve_g(crg, p, mode).g


def clear_solver_cache():
    _solve_cached.cache_clear()
