"""Radical-square-zero algebras: derived representation type and the
indecomposable objects of the bounded derived category."""
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND"]
