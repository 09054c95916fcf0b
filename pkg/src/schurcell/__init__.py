"""Exact computations with divided powers, generalized Schur algebras and
their cellular bases."""

__version__ = "0.1.0"
