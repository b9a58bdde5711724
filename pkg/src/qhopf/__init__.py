"""Exact and numerical tools for the quantum Hopf fibration over the Podles sphere."""

__version__ = "0.1.0"
