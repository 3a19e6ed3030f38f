"""Equation systems ``lhs = rhs`` with a declared set of unknowns."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gaussian import GaussianRational
from .matrix import PolyMatrix
from .poly import Poly, Symbol, proportionality


@dataclass(frozen=True)
class Equation:
    lhs: Poly
    rhs: Poly
    label: str = ""

    @property
    def residual(self) -> Poly:
        return self.lhs - self.rhs

    def holds(self) -> bool:
        return self.residual.is_zero()

    def subs(self, mapping) -> "Equation":
        return Equation(self.lhs.subs(mapping), self.rhs.subs(mapping), self.label)

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class EquationSystem:
    equations: tuple[Equation, ...]
    unknowns: tuple[Symbol, ...] = field(default=())

    @classmethod
    def of(cls, equations: Iterable[Equation], unknowns: Iterable[Symbol] = ()) -> "EquationSystem":
        return cls(tuple(equations), tuple(unknowns))

    def __len__(self):
        return len(self.equations)

    def __iter__(self):
        return iter(self.equations)

    def __getitem__(self, i) -> Equation:
        return self.equations[i]

    def residuals(self) -> list[Poly]:
        return [eq.residual for eq in self.equations]

    def subs(self, mapping) -> "EquationSystem":
        return EquationSystem(tuple(eq.subs(mapping) for eq in self.equations), self.unknowns)

    def with_unknowns(self, unknowns: Sequence[Symbol]) -> "EquationSystem":
        return EquationSystem(self.equations, tuple(unknowns))

    def coefficient_matrix(self, unknowns: Sequence[Symbol] | None = None) -> PolyMatrix:
        """Matrix ``M`` with ``residual_i = sum_j M_ij x_j``; raises on inhomogeneous terms."""
        unknowns = tuple(unknowns or self.unknowns)
        rows = []
        for eq in self.equations:
            coeffs, rest = eq.residual.linear_split(unknowns)
            if rest:
                raise ValueError(f"equation {eq.label or eq} has terms free of the unknowns: {rest}")
            rows.append(coeffs)
        return PolyMatrix(self.equations[0].lhs.table, rows)


def equivalence_factor(a: Equation | Poly, b: Equation | Poly) -> GaussianRational | None:
    """Nonzero ``k`` with ``residual(a) == k * residual(b)``, or ``None``.

    Two identically-zero residuals count as equivalent with factor 1.
    """
    ra = a.residual if isinstance(a, Equation) else a
    rb = b.residual if isinstance(b, Equation) else b
    if ra.is_zero() and rb.is_zero():
        return GaussianRational(1)
    return proportionality(ra, rb)
