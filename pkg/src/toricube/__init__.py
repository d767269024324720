"""Exact toric h- and g-polynomials of cubical complexes and their tree,
noncrossing-partition and Motzkin-path models."""

from .polynomial import Polynomial

__version__ = "0.1.0"
__all__ = ["Polynomial", "__version__"]
