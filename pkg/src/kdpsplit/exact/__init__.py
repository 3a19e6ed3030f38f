"""Exact scalars, polynomials, matrices and linear algebra."""

from .gaussian import I, ONE, ZERO, GaussianRational, format_rational, parse_rational
from .linalg import bareiss_echelon, determinant, mat_vec, nullspace, rank
from .matrix import PolyMatrix, anticommutator, commutator
from .poly import InverseMass, Kind, MassShell, Poly, Rule, Symbol, SymbolTable, proportionality
from .system import Equation, EquationSystem, equivalence_factor

__all__ = [
    "I", "ONE", "ZERO", "GaussianRational", "format_rational", "parse_rational",
    "bareiss_echelon", "determinant", "mat_vec", "nullspace", "rank",
    "PolyMatrix", "anticommutator", "commutator",
    "InverseMass", "Kind", "MassShell", "Poly", "Rule", "Symbol", "SymbolTable", "proportionality",
    "Equation", "EquationSystem", "equivalence_factor",
]
