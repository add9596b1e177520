# g_K(p) evaluation, p-core decisions and minimizer identities
from solver.qp import GRecord, solve_g

__all__ = ["GRecord", "solve_g"]
