"""
Finite witnesses for blow-up statements: many black vertices standing in for
one white vertex, the dalmatian transfer, and the dalmatian obstruction.
"""
import logging
from typing import Dict, List, Tuple

from crg.colored_graph import blowup_mass, blowup_uniform
from crg.constructions import dalmatian, is_zero_core, make_kwb
from crg.model import Crg, ProbMass
from embed.colored_order import check_colored_witness, colored_leq
from embed.graph_embed import family_embeds
from graphs.family import FamilySpec
from utils.error_handler import InconsistencyError, NotCoreError, PreconditionError

logger = logging.getLogger(__name__)


def manyblack_witness(crg: Crg, n: int) -> Tuple[int, ...]:
    """
    The injection n x K(t+1,0) -> n x K for a 0-core K with t white and at
    least n black vertices: copy j of white part i goes to copy j of K's i-th
    white part, and copy j of the extra part goes to copy 0 of K's j-th
    black part. The map is replayed against ⊑ before it is returned.
    """
    if not is_zero_core(crg):
        raise NotCoreError(f"{crg.label()} is not 0-core")
    whites, blacks = crg.white_vertices, crg.black_vertices
    if n < 1 or len(blacks) < n:
        raise PreconditionError(f"need 1 <= n <= |VB| = {len(blacks)}, got n={n}")
    t = len(whites)
    phi: List[int] = []
    for i in range(t):
        phi.extend(whites[i] * n + j for j in range(n))
    phi.extend(blacks[j] * n for j in range(n))

    small = blowup_uniform(make_kwb(t + 1, 0), n)
    large = blowup_uniform(crg, n)
    if not check_colored_witness(small, large, phi):
        raise InconsistencyError(f"constructed map does not realize {small.label()} ⊑ {large.label()}")
    logger.debug(f"manyblack witness for {crg.label()} with n={n}: {phi}")
    return tuple(phi)


def dalmatian_transfer_check(crg: Crg, other: Crg, mu: ProbMass, m: int, n: int, r: int) -> Dict:
    """
    If n x K ⊑ L[mu,m] then n x K^n(r) ⊑ L[mu,m]. Reports both sides; `holds`
    is the implication.
    """
    if not is_zero_core(crg):
        raise NotCoreError(f"{crg.label()} is not 0-core")
    if mu.k != other.k:
        raise PreconditionError(f"mass has {mu.k} coordinates, L has {other.k} vertices")
    s, t = len(crg.white_vertices), len(other.white_vertices)
    if s <= t:
        raise PreconditionError(f"|VW(K)|={s} must exceed |VW(L)|={t}")
    if not 1 <= r <= s - t:
        raise PreconditionError(f"r={r} outside 1..{s - t}")
    if any(m * mu[x] < n for x in other.black_vertices):
        raise PreconditionError(f"m*mu(x) >= n fails on a black vertex of L")

    host = blowup_mass(other, mu, m)
    before = colored_leq(blowup_uniform(crg, n), host)
    after = colored_leq(blowup_uniform(dalmatian(crg, n, r), n), host)
    holds = (not before.holds) or after.holds
    if not holds:
        logger.warning(f"dalmatian transfer failed for K={crg.label()}, L={other.label()}, m={m}, n={n}, r={r}")
    return {
        "premise": before.holds,
        "conclusion": after.holds,
        "holds": holds,
        "host_size": host.size,
    }


def dalmatian_obstruction(spec: FamilySpec, crg: Crg, w: int, ell_max: int) -> Dict:
    """
    For 1 <= r <= |VW(K)| - w and 1 <= ell <= ell_max, test whether the
    family embeds in K^ell(r). Any hit means K cannot be the limit CRG of a
    sequence whose CRGs keep at least w white vertices.
    """
    s = len(crg.white_vertices)
    if ell_max < 1:
        raise PreconditionError(f"ell_max must be positive, got {ell_max}")
    hits = []
    rows = []
    for r in range(1, s - w + 1):
        for ell in range(1, ell_max + 1):
            verdict = family_embeds(spec, dalmatian(crg, ell, r))
            rows.append({"r": r, "ell": ell, "embeds": verdict.embeds, "bounded": verdict.bounded,
                         "member": repr(verdict.member) if verdict.member is not None else None})
            if verdict.embeds:
                hits.append((r, ell))
    logger.info(f"dalmatian obstruction for {crg.label()}: {len(hits)} of {len(rows)} substitutions admit the family")
    return {"crg": crg.label(), "obstructed": bool(hits), "rows": rows}
