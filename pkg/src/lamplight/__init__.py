"""Lamp lighting games on graphs and grids, solved over GF(2)."""

from lamplight.gf2 import GF2Matrix, GF2Vector, Poly2
from lamplight.graph import ActionMatrix, Graph

__all__ = ["ActionMatrix", "GF2Matrix", "GF2Vector", "Graph", "Poly2"]
