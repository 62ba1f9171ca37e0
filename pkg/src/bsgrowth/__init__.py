"""Geodesics, automata and growth rates for the Baumslag-Solitar groups BS(1, n)."""

from .automata import Automaton, build_Dn, build_Dn_prime, count_accepted, expand_to_On
from .geodesic import eta, geodesic, is_minimal, minimal_vector, path_length
from .group import GroupElement, GroupParams, bfs_distance, bfs_spheres, evaluate_word, multiply, normalize
from .growth import growth_rate, smallest_root, theorem_polynomial
from .lattice import BoxParams, DigitVector, sigma
from .shape_map import c_map, phi, preimage_count

__version__ = "0.1.0"

__all__ = [
    "Automaton",
    "BoxParams",
    "DigitVector",
    "GroupElement",
    "GroupParams",
    "bfs_distance",
    "bfs_spheres",
    "build_Dn",
    "build_Dn_prime",
    "c_map",
    "count_accepted",
    "eta",
    "evaluate_word",
    "expand_to_On",
    "geodesic",
    "growth_rate",
    "is_minimal",
    "minimal_vector",
    "multiply",
    "normalize",
    "path_length",
    "phi",
    "preimage_count",
    "sigma",
    "smallest_root",
    "theorem_polynomial",
]
