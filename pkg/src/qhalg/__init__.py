"""Exact computations with quasi-hereditary algebras given by quivers with relations."""

__version__ = "0.1.0"
