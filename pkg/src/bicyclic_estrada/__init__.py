"""Estrada index tools for bicyclic graphs: walk counts, spectra,
enumeration and extremal verification."""
from .graph import Graph, GraphError, build_g1, build_g2, build_infty, build_theta, classify
from .spectra import estrada_index, eigenvalues, charpoly_recursive
from .walks import spectral_moments, dominance

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "build_g1", "build_g2", "build_infty", "build_theta", "classify",
    "estrada_index", "eigenvalues", "charpoly_recursive", "spectral_moments", "dominance",
]
