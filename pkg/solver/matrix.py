"""
The weight matrix M_K(p) of a CRG.
"""
import logging
from fractions import Fraction

import numpy as np

from config.constants import SolveMode
from crg.model import Crg, EdgeColor, VertexColor
from utils.error_handler import PreconditionError
from utils.numeric import Number, to_mode

logger = logging.getLogger(__name__)


def entry_for(color, p: Number) -> Number:
    """p for white, 1-p for black, 0 for gray (vertex or edge colors)."""
    if color in (VertexColor.WHITE, EdgeColor.WHITE):
        return p
    if color in (VertexColor.BLACK, EdgeColor.BLACK):
        return 1 - p
    return p * 0


def build_matrix(crg: Crg, p: Number, mode: SolveMode = None) -> np.ndarray:
    """
    Symmetric k x k matrix. Exact mode gives an object array of Fractions,
    float mode a float64 array.
    """
    if not 0 <= p <= 1:
        raise PreconditionError(f"p={p} outside [0,1]")
    if mode is None:
        mode = SolveMode.EXACT if isinstance(p, (Fraction, int)) else SolveMode.FLOAT
    value = to_mode(p, mode)
    k = crg.k
    if mode is SolveMode.EXACT:
        matrix = np.empty((k, k), dtype=object)
    else:
        matrix = np.empty((k, k), dtype=float)
    for v in range(k):
        matrix[v, v] = entry_for(crg.vertex(v), value)
    for i, j in crg.pairs():
        matrix[i, j] = matrix[j, i] = entry_for(crg.edge(i, j), value)
    return matrix


def quadratic_form(matrix: np.ndarray, weights) -> Number:
    """<mu, M mu>; exact when both sides hold Fractions."""
    if matrix.dtype == object:
        mu = np.array(list(weights), dtype=object)
        return (mu.dot(matrix)).dot(mu)
    mu = np.asarray([float(w) for w in weights], dtype=float)
    return float(mu @ matrix @ mu)
