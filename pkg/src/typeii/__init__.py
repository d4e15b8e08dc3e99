"""Exact computations around extremal Type II lattices.

Extremal theta series, zonal harmonic restrictions, the homogeneous
system over inner-product counts against a minimal vector, and an exact
short-vector engine for checking shell properties on explicit lattices.
"""

__version__ = "0.1.0"
