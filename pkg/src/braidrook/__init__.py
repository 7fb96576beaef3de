"""Exact-arithmetic Burau representations, rook-monoid diagram algebras,
and commutant computations tying the two together."""

__version__ = "0.1.0"
