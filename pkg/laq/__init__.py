"""Exact cohomology of LA-groupoids and their Q-groupoids over finite bases."""

__version__ = "0.1.0"
