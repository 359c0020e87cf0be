"""Two numeric backends: exact rationals (``Fraction``) and binary64 floats.

Library functions are written once and follow Python's numeric tower, so the
backend is decided by the types of the arguments.  Mixing a ``Fraction`` with a
``float`` degrades to ``float``; everything in here exists to make that choice
explicit at the edges (CLI, JSON files).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[Fraction, float]


class Backend(str, Enum):
    RATIONAL = "rational"
    FLOAT = "float"

    def coerce(self, value) -> Scalar:
        if self is Backend.RATIONAL:
            return to_exact(value)
        return float(to_exact(value)) if isinstance(value, str) else float(value)

    @property
    def exact(self) -> bool:
        return self is Backend.RATIONAL


def to_exact(value) -> Fraction:
    """Convert ints, floats, Fractions and ``"p/q"`` strings to ``Fraction``.

    Floats convert exactly (their binary value), not via their decimal repr.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def backend_of(*values) -> Backend:
    return Backend.FLOAT if any(isinstance(v, float) for v in values) else Backend.RATIONAL


def format_scalar(value):
    """JSON-ready form: rationals as ``"p/q"`` strings, floats unchanged."""
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return str(Fraction(value))
    return float(value)


def parse_scalar(value, backend: Backend) -> Scalar:
    return backend.coerce(value)
