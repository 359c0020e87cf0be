"""Generalized Bernstein basis functions on [a, b] and the identities that
follow from their generating functions."""

from .basis_core import (
    UNIT,
    BasisIndex,
    Interval,
    alternating_sum,
    basis_row,
    bernstein,
    elevate_basis,
    eval_closed_form,
    eval_recursive,
    symmetry_partner,
)
from .errors import DivergenceError, InconsistentSystem, NotDivisible, RangeError, TruncationError
from .scalar import Backend

__version__ = "0.1.0"
