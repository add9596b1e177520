"""
Numeric helpers shared by the solver, envelope and output layers.
Values are either fractions.Fraction (exact mode) or float (float mode).
"""
import logging
from fractions import Fraction
from typing import Union

from config.constants import SolveMode, FLOAT_DIGITS, G_TOL
from utils.error_handler import ExactModeError, SpecFormatError

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]


def parse_probability(text, field: str = "p") -> Number:
    """
    Parse "num/den" into a Fraction and a decimal into a float.
    Integers and Fractions pass through as Fractions.
    """
    if isinstance(text, Fraction):
        value = text
    elif isinstance(text, int):
        value = Fraction(text)
    elif isinstance(text, float):
        value = text
    else:
        raw = str(text).strip()
        try:
            if "/" in raw:
                num, den = raw.split("/", 1)
                value = Fraction(int(num), int(den))
            elif raw.isdigit():
                value = Fraction(int(raw))
            else:
                value = float(raw)
        except (ValueError, ZeroDivisionError) as e:
            raise SpecFormatError(field, f"cannot parse probability {raw!r}: {e}")
    if not 0 <= value <= 1:
        raise SpecFormatError(field, f"probability {value} outside [0,1]")
    return value


def to_mode(value: Number, mode: SolveMode) -> Number:
    """Coerce a probability into the arithmetic of the given mode."""
    if mode is SolveMode.EXACT:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise ExactModeError(f"exact mode needs a rational p, got {value!r}")
    return float(value)


def mode_for(value: Number, exact: bool) -> SolveMode:
    if exact:
        if not isinstance(value, (Fraction, int)):
            raise ExactModeError(f"--exact requires a rational p such as 1/4, got {value!r}")
        return SolveMode.EXACT
    return SolveMode.FLOAT


def format_number(value) -> Union[str, float, int]:
    """Rationals become "num/den" strings, floats are rounded to 17 significant digits."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return f"{value.numerator}"
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return value
    return float(f"{float(value):.{FLOAT_DIGITS}g}")


def is_zero(value: Number, tol: float = G_TOL) -> bool:
    if isinstance(value, Fraction):
        return value == 0
    return abs(value) <= tol


def close(a: Number, b: Number, tol: float = G_TOL) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return abs(float(a) - float(b)) <= tol


def strictly_greater(a: Number, b: Number, tol: float = G_TOL) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a > b
    return float(a) > float(b) + tol


def zero_of(value: Number):
    return Fraction(0) if isinstance(value, Fraction) else 0.0
