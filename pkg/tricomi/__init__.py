"""Fundamental solutions of the generalized Tricomi operator y*Laplace_x + d^2/dy^2."""

__version__ = "0.1.0"
