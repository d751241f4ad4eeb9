"""Exact symbolic computation in truncated Yangians.

Normal-ordered generator algebra, series over it, the generating-matrix
presentation with its quantum minors, the current (Chevalley-style)
presentation, and the Hopf structure maps in both presentations.
"""

from .algebra import (
    Context, Element, Tensor, TruncationError, GL, SL,
    commutator, generator, mode_commutator, normal_order, sl_reduce,
    unit, zero,
)
from .series import Series, SeriesMatrix

__all__ = [
    "Context", "Element", "Tensor", "TruncationError", "GL", "SL",
    "commutator", "generator", "mode_commutator", "normal_order",
    "sl_reduce", "unit", "zero", "Series", "SeriesMatrix",
]

__version__ = "0.1.0"
