"""Nilpotent orbits of classical Lie algebras: partition combinatorics,
induction, duality, infinitesimal characters, weights and numeric checks."""
from .infchar import InfChar, even_dual_infchar, infchar, infchar_equal, recipe_infchar, rho, rho_gl, triangular_infchar
from .orbits import LeviShape, OrbitDescriptor, bv_dual, enumerate_orbits, induce, induce_general, orbit
from .partitions import Partition, collapse, dominates, is_valid, transpose

__version__ = "0.1.0"

__all__ = [
    "InfChar",
    "LeviShape",
    "OrbitDescriptor",
    "Partition",
    "bv_dual",
    "collapse",
    "dominates",
    "enumerate_orbits",
    "even_dual_infchar",
    "induce",
    "induce_general",
    "infchar",
    "infchar_equal",
    "is_valid",
    "orbit",
    "recipe_infchar",
    "rho",
    "rho_gl",
    "transpose",
    "triangular_infchar",
]
