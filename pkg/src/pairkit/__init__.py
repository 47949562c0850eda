"""Semiring pairs (A, A0): instances, polynomials, matrices, linear algebra,
congruences and morphisms, with exhaustive law checking on small carriers."""

from .core import (BoundExceeded, DomainMismatch, NotMetatangible, Pair, PairError, Report,
                   Undecidable, classify)
from .registry import get, listed

__version__ = "0.1.0"

__all__ = ["BoundExceeded", "DomainMismatch", "NotMetatangible", "Pair", "PairError", "Report",
           "Undecidable", "classify", "get", "listed"]
