"""Dense matrices of polynomials."""

from __future__ import annotations

from typing import Sequence

from .gaussian import GaussianRational
from .poly import Poly, SymbolTable


class PolyMatrix:
    __slots__ = ("table", "rows", "cols", "entries")

    def __init__(self, table: SymbolTable, entries: Sequence[Sequence]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        self.table = table
        self.rows = len(rows)
        self.cols = cols
        self.entries = tuple(
            tuple(e if isinstance(e, Poly) else Poly.const(table, e) for e in r) for r in rows
        )
        for r in self.entries:
            for e in r:
                if e.table is not table:
                    raise ValueError("entry from a different symbol table")

    @classmethod
    def zeros(cls, table: SymbolTable, rows: int, cols: int | None = None) -> "PolyMatrix":
        return cls(table, [[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def identity(cls, table: SymbolTable, n: int) -> "PolyMatrix":
        return cls(table, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, table: SymbolTable, values: Sequence) -> "PolyMatrix":
        n = len(values)
        return cls(table, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["PolyMatrix"]]) -> "PolyMatrix":
        table = blocks[0][0].table
        out = []
        for brow in blocks:
            for i in range(brow[0].rows):
                out.append([e for b in brow for e in b.entries[i]])
        return cls(table, out)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def _check_same(self, other: "PolyMatrix"):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected a PolyMatrix")
        if other.table is not self.table:
            raise ValueError("matrices belong to different symbol tables")

    def __add__(self, other):
        self._check_same(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return PolyMatrix(self.table, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return PolyMatrix(self.table, [[-a for a in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(self.table, [[a * c for a in r] for r in self.entries])

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_same(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Poly(self.table)
        # sparse row-by-row accumulation; most matrices here are very sparse
        right = [[(j, e) for j, e in enumerate(r) if e] for r in other.entries]
        out = []
        for r in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in right[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return PolyMatrix(self.table, out)

    def apply(self, vector: Sequence) -> list[Poly]:
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape} matrix")
        vec = [v if isinstance(v, Poly) else Poly.const(self.table, v) for v in vector]
        out = []
        for r in self.entries:
            acc = Poly(self.table)
            for a, v in zip(r, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.table, [list(c) for c in zip(*self.entries)])

    T = property(transpose)

    def conj(self) -> "PolyMatrix":
        return PolyMatrix(self.table, [[a.conj() for a in r] for r in self.entries])

    def dagger(self) -> "PolyMatrix":
        return self.conj().transpose()

    def subs(self, mapping) -> "PolyMatrix":
        return PolyMatrix(self.table, [[a.subs(mapping) for a in r] for r in self.entries])

    def reduce(self, rules) -> "PolyMatrix":
        rules = tuple(rules)
        return PolyMatrix(self.table, [[a.reduce(rules) for a in r] for r in self.entries])

    def is_zero(self) -> bool:
        return all(not a for r in self.entries for a in r)

    def nnz(self) -> int:
        return sum(1 for r in self.entries for a in r if a)

    def is_constant(self) -> bool:
        return all(a.is_constant() for r in self.entries for a in r)

    def constant_rows(self) -> list[list[GaussianRational]]:
        return [[a.constant_value() for a in r] for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.table is other.table and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.entries)


def commutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a * b - b * a


def anticommutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a * b + b * a
