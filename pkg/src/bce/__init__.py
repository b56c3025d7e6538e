"""Exact braided exterior algebras, their Clifford deformations and spinor modules."""

__version__ = "0.1.0"
