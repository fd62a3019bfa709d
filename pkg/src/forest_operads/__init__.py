"""Planar forests: the Hopf algebra of left-admissible cuts, its pairing, the grafting operads and the forest Tamari order."""
from .algebra import DomainError, Element, Tensor
from .combinat import ParseError, parse_binary, parse_forest, render_forest

__all__ = ["DomainError", "Element", "ParseError", "Tensor", "parse_binary", "parse_forest", "render_forest"]
