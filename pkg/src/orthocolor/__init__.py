"""Orthogonal colorings of the sphere: exact orthogonality graphs, octahedral and 2-adic colorings."""

from .coloring import (
    Coloring,
    KSAssignment,
    brute_force_chromatic,
    chromatic_number,
    ks_colorable,
    validate_coloring,
)
from .exact import INFINITY, Vec, dot, triple_sign, two_adic
from .graph import OrthoGraph, VectorConfig, build_graph, builtin_decorte13, greedy_clique
from .octahedral import (
    STANDARD,
    OrthonormalBasis,
    find_negative_triple,
    is_locally_octahedral,
    is_octahedral_wrt,
    octa_class,
    search_octahedral_basis,
)
from .sphere import Quadruple, canonicalize, enumerate_points, orthogonal_pairs
from .valuation import baek_partition, baek_set, gz_color, verify_baek, verify_gz

__all__ = [
    "INFINITY", "STANDARD", "Coloring", "KSAssignment", "OrthoGraph", "OrthonormalBasis",
    "Quadruple", "Vec", "VectorConfig", "baek_partition", "baek_set", "brute_force_chromatic",
    "build_graph", "builtin_decorte13", "canonicalize", "chromatic_number", "dot",
    "enumerate_points", "find_negative_triple", "greedy_clique", "gz_color",
    "is_locally_octahedral", "is_octahedral_wrt", "ks_colorable", "octa_class",
    "orthogonal_pairs", "search_octahedral_basis", "triple_sign", "two_adic",
    "validate_coloring", "verify_baek", "verify_gz",
]
