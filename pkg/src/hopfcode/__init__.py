"""Exact algebra toolkit for monomial forms, right ideals and small Hopf algebras."""

from __future__ import annotations

from hopfcode.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
