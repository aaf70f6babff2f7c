"""Exact finite-field, Fermat-equation and elliptic-curve computations."""

__version__ = "0.1.0"

from .galois import GaloisField, GFElement, gf_make  # noqa: E402
from .polyring import DensePoly  # noqa: E402

__all__ = ["DensePoly", "GFElement", "GaloisField", "gf_make", "__version__"]
