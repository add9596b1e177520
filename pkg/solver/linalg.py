"""
Small dense linear solves: Gaussian elimination over Fractions for exact
mode, numpy with a conditioning check for float mode. Both return None for
singular systems instead of raising.
"""
import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from config.constants import SINGULAR_COND

logger = logging.getLogger(__name__)


def solve_exact(matrix: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """Solve matrix @ x = rhs over the rationals; None when singular."""
    n = matrix.shape[0]
    X = np.array(matrix, dtype=object)
    y = np.array(rhs, dtype=object)

    # downward elimination: zero the lower triangle and put 1 on the diagonal
    for i in range(n):
        for j in range(i, n):
            if X[j, i] != 0:
                if i != j:
                    X[[i, j]] = X[[j, i]]
                    y[[i, j]] = y[[j, i]]
                break
        else:
            return None
        pivot = Fraction(X[i, i])
        X[i, :] = X[i, :] / pivot
        y[i] = y[i] / pivot
        for j in range(i + 1, n):
            factor = X[j, i]
            if factor != 0:
                X[j, :] = X[j, :] - factor * X[i, :]
                y[j] = y[j] - factor * y[i]

    # back substitution
    x = np.empty(n, dtype=object)
    for i in range(n - 1, -1, -1):
        acc = y[i]
        for j in range(i + 1, n):
            if X[i, j] != 0:
                acc = acc - X[i, j] * x[j]
        x[i] = Fraction(acc)
    return x


def solve_float(matrix: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """Solve with numpy; None when the system is singular or badly conditioned."""
    A = np.asarray(matrix, dtype=float)
    if np.linalg.cond(A) > SINGULAR_COND:
        return None
    try:
        return np.linalg.solve(A, np.asarray(rhs, dtype=float))
    except np.linalg.LinAlgError:
        return None


def bordered_system(sub: np.ndarray):
    """
    Stationarity system on a support: [[M_S, -1], [1^T, 0]] [mu; g] = [0; 1].
    Returns (matrix, rhs) in the dtype of `sub`.
    """
    s = sub.shape[0]
    exact = sub.dtype == object
    zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)
    A = np.empty((s + 1, s + 1), dtype=object if exact else float)
    A[:s, :s] = sub
    A[:s, s] = -one
    A[s, :s] = one
    A[s, s] = zero
    rhs = np.array([zero] * s + [one], dtype=object if exact else float)
    return A, rhs


def solve_stationary(sub: np.ndarray):
    """(mu_S, g) for the stationarity system, or None when it is singular."""
    A, rhs = bordered_system(sub)
    x = solve_exact(A, rhs) if sub.dtype == object else solve_float(A, rhs)
    if x is None:
        return None
    return x[:-1], x[-1]
