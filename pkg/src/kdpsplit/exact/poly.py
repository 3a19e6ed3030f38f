"""Canonical multivariate polynomials over the Gaussian rationals.

A :class:`Poly` is a mapping ``monomial -> coefficient`` with no zero
coefficients stored.  A monomial is a tuple of ``(symbol_id, exponent)``
pairs sorted by the symbol order of the owning :class:`SymbolTable`, so two
polynomials are mathematically equal exactly when their term maps are equal.

Symbols commute.  Each symbol has a *kind* that fixes how complex
conjugation acts on it: momenta are operators ``p = i d/dx`` and change sign,
fields are mapped to a starred partner, and everything else is real.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .gaussian import ONE, ZERO, GaussianRational


class Kind(enum.IntEnum):
    # the integer value is the rank in the global monomial order
    MOMENTUM = 0
    MASS = 1
    INVERSE_MASS = 2
    PARAMETER = 3
    POTENTIAL = 4
    FIELD = 5


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: Kind
    id: int

    def __str__(self):
        return self.name


# '*' is reserved for products in printed polynomials
STAR = "^star"


@dataclass
class SymbolTable:
    """Registry of symbols; polynomials from different tables never mix."""

    symbols: list[Symbol] = field(default_factory=list)
    by_name: dict[str, Symbol] = field(default_factory=dict)
    inverse_of: dict[int, int] = field(default_factory=dict)
    star_of: dict[int, int] = field(default_factory=dict)

    def add(self, name: str, kind: Kind) -> Symbol:
        if name in self.by_name:
            existing = self.by_name[name]
            if existing.kind is not kind:
                raise ValueError(f"symbol {name!r} already declared as {existing.kind.name}")
            return existing
        if not name or any(c in name for c in " *+()"):
            raise ValueError(f"bad symbol name {name!r}")
        sym = Symbol(name, kind, len(self.symbols))
        self.symbols.append(sym)
        self.by_name[name] = sym
        return sym

    def mass(self, name: str = "m", inverse: str | None = None) -> tuple[Symbol, Symbol]:
        """Declare a mass together with its inverse symbol ``m*m_inv -> 1``."""
        m = self.add(name, Kind.MASS)
        if m.id in self.inverse_of:
            inv = self.symbols[self.inverse_of[m.id]]
            if inverse is not None and inv.name != inverse:
                raise ValueError(f"mass {name!r} already has inverse {inv.name!r}")
            return m, inv
        inv = self.add(inverse or f"{name}_inv", Kind.INVERSE_MASS)
        if inv.id in self.inverse_of.values():
            raise ValueError(f"{inv.name!r} is already the inverse of another mass")
        self.inverse_of[m.id] = inv.id
        return m, inv

    def key(self, sid: int) -> tuple[int, int]:
        return (int(self.symbols[sid].kind), sid)

    def __getitem__(self, name: str) -> Symbol:
        return self.by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self.by_name

    def starred(self, sym: Symbol) -> Symbol:
        if sym.kind is not Kind.FIELD:
            raise ValueError(f"{sym.name} is not a field symbol")
        if sym.id not in self.star_of:
            if sym.name.endswith(STAR):
                partner = self.add(sym.name[:-len(STAR)], Kind.FIELD)
            else:
                partner = self.add(sym.name + STAR, Kind.FIELD)
            self.star_of[sym.id] = partner.id
            self.star_of[partner.id] = sym.id
        return self.symbols[self.star_of[sym.id]]

    def poly(self, name: str) -> "Poly":
        return Poly.symbol(self, self.by_name[name])

    def polys(self, *names: str) -> list["Poly"]:
        return [self.poly(n) for n in names]

    def const(self, value) -> "Poly":
        return Poly.const(self, value)


Monomial = tuple  # tuple[tuple[int, int], ...]


def _mono_mul(a: Monomial, b: Monomial, key) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for sid, e in b:
        exps[sid] = exps.get(sid, 0) + e
    return tuple(sorted(exps.items(), key=lambda t: key(t[0])))


class Poly:
    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: SymbolTable, terms: Mapping[Monomial, GaussianRational] | None = None):
        self.table = table
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def const(cls, table: SymbolTable, value) -> "Poly":
        c = GaussianRational.coerce(value)
        return cls(table, {(): c} if c else {})

    @classmethod
    def symbol(cls, table: SymbolTable, sym: Symbol | str, power: int = 1) -> "Poly":
        if isinstance(sym, str):
            sym = table[sym]
        return cls(table, {((sym.id, power),): ONE})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.table is not self.table:
                raise ValueError("polynomials belong to different symbol tables")
            return other
        return Poly.const(self.table, other)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not o.terms:
            return self
        out = dict(self.terms)
        for mono, c in o.terms.items():
            s = out.get(mono)
            out[mono] = c if s is None else s + c
        return Poly(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.table, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.table is not self.table:
                raise ValueError("polynomials belong to different symbol tables")
        else:
            try:
                c = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly(self.table)
            return Poly(self.table, {k: v * c for k, v in self.terms.items()})
        if not self.terms or not other.terms:
            return Poly(self.table)
        key = self.table.key
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = _mono_mul(ma, mb, key)
                prod = ca * cb
                s = out.get(mono)
                out[mono] = prod if s is None else s + prod
        return Poly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.table, 1)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        # only division by exact scalars; polynomial division is out of scope
        c = GaussianRational.coerce(other)
        return self * c.inverse()

    # -- predicates and accessors -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not mono for mono in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self.terms.get((), ZERO)

    def symbols(self) -> set[Symbol]:
        return {self.table.symbols[sid] for mono in self.terms for sid, _ in mono}

    def degree(self) -> int:
        return max((sum(e for _, e in mono) for mono in self.terms), default=0)

    def degree_in(self, sym: Symbol) -> int:
        return max((e for mono in self.terms for sid, e in mono if sid == sym.id), default=0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.table is other.table and self.terms == other.terms
        try:
            return self.terms == Poly.const(self.table, other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- transformations ----------------------------------------------------

    def conj(self) -> "Poly":
        """Complex conjugate: momenta flip sign, fields go to starred partners."""
        table = self.table
        out: dict = {}
        for mono, c in self.terms.items():
            sign = 1
            new = []
            for sid, e in mono:
                sym = table.symbols[sid]
                if sym.kind is Kind.MOMENTUM:
                    if e % 2:
                        sign = -sign
                    new.append((sid, e))
                elif sym.kind is Kind.FIELD:
                    new.append((table.starred(sym).id, e))
                else:
                    new.append((sid, e))
            new_mono = tuple(sorted(new, key=lambda t: table.key(t[0])))
            cc = c.conj() if sign > 0 else -c.conj()
            s = out.get(new_mono)
            out[new_mono] = cc if s is None else s + cc
        return Poly(table, out)

    def subs(self, mapping: Mapping) -> "Poly":
        """Substitute polynomials for symbols (keys: Symbol, name, or symbol Poly)."""
        table = self.table
        repl: dict[int, Poly] = {}
        for k, v in mapping.items():
            if isinstance(k, Poly):
                (mono,) = k.terms
                (sid, _), = mono
            elif isinstance(k, str):
                sid = table[k].id
            else:
                sid = k.id
            repl[sid] = self._coerce(v)
        if not repl:
            return self
        result = Poly(table)
        cache: dict[tuple[int, int], Poly] = {}
        for mono, c in self.terms.items():
            keep = []
            term = Poly.const(table, c)
            for sid, e in mono:
                if sid in repl:
                    pw = cache.get((sid, e))
                    if pw is None:
                        pw = cache[(sid, e)] = repl[sid] ** e
                    term = term * pw
                else:
                    keep.append((sid, e))
            if keep:
                term = term * Poly(table, {tuple(keep): ONE})
            result = result + term
        return result

    def coefficient(self, sym: Symbol, power: int = 1) -> "Poly":
        """Coefficient of ``sym**power`` (terms with exactly that power)."""
        out = {}
        for mono, c in self.terms.items():
            e = dict(mono).get(sym.id, 0)
            if e == power:
                out[tuple(t for t in mono if t[0] != sym.id)] = c
        return Poly(self.table, out)

    def linear_split(self, unknowns: Iterable[Symbol]) -> tuple[list["Poly"], "Poly"]:
        """Write ``self = sum_j coeff_j * x_j + rest`` for degree-one unknowns.

        Raises if an unknown appears non-linearly or two unknowns multiply.
        """
        unknowns = list(unknowns)
        index = {u.id: j for j, u in enumerate(unknowns)}
        coeffs: list[dict] = [{} for _ in unknowns]
        rest: dict = {}
        for mono, c in self.terms.items():
            hits = [(sid, e) for sid, e in mono if sid in index]
            if not hits:
                rest[mono] = c
                continue
            if len(hits) > 1 or hits[0][1] != 1:
                raise ValueError(f"expression is not linear in the unknowns: {self}")
            sid = hits[0][0]
            coeffs[index[sid]][tuple(t for t in mono if t[0] != sid)] = c
        return [Poly(self.table, d) for d in coeffs], Poly(self.table, rest)

    def reduce(self, rules: Iterable["Rule"]) -> "Poly":
        rules = tuple(rules)
        current = self
        while True:
            nxt = current
            for rule in rules:
                nxt = rule.apply(nxt)
            if nxt == current:
                return current
            current = nxt

    # -- printing -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, GaussianRational]]:
        """Terms in descending lexicographic monomial order."""
        table = self.table
        used = sorted({sid for mono in self.terms for sid, _ in mono}, key=table.key)

        def dense(mono):
            d = dict(mono)
            return tuple(-d.get(s, 0) for s in used)

        return sorted(self.terms.items(), key=lambda kv: dense(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.table.symbols
        parts = []
        for mono, c in self.sorted_terms():
            factors = "*".join(names[sid].name if e == 1 else f"{names[sid].name}^{e}" for sid, e in mono)
            negative = c.is_real() and c.re < 0
            mag = -c if negative else c
            if not factors:
                body = str(mag)
            elif mag == ONE:
                body = factors
            elif mag.is_real() or not mag.re:
                body = f"{mag}*{factors}"
            else:
                body = f"({mag})*{factors}"
            parts.append(("-", body) if negative else ("+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


class Rule:
    def apply(self, poly: Poly) -> Poly:  # pragma: no cover - interface
        raise NotImplementedError


@dataclass(frozen=True)
class InverseMass(Rule):
    """``m * m_inv -> 1``."""

    mass: Symbol
    inverse: Symbol

    def apply(self, poly: Poly) -> Poly:
        m, inv = self.mass.id, self.inverse.id
        out: dict = {}
        changed = False
        for mono, c in poly.terms.items():
            d = dict(mono)
            k = min(d.get(m, 0), d.get(inv, 0))
            if k:
                changed = True
                d[m] -= k
                d[inv] -= k
                mono = tuple((s, d[s]) for s, _ in mono if d[s])
            s = out.get(mono)
            out[mono] = c if s is None else s + c
        return Poly(poly.table, out) if changed else poly


@dataclass(frozen=True)
class MassShell(Rule):
    """``(p0)^2 -> (p1)^2 + (p2)^2 + (p3)^2 + m^2`` on terms that contain ``field``."""

    field: Symbol
    momenta: tuple[Symbol, Symbol, Symbol, Symbol]
    mass: Symbol

    def apply(self, poly: Poly) -> Poly:
        table = poly.table
        p0 = self.momenta[0].id
        shell = Poly(table, {((s.id, 2),): ONE for s in self.momenta[1:]}) + Poly.symbol(table, self.mass, 2)
        kept: dict = {}
        rewritten = Poly(table)
        changed = False
        for mono, c in poly.terms.items():
            d = dict(mono)
            if d.get(self.field.id) and d.get(p0, 0) >= 2:
                changed = True
                k = d[p0] // 2
                rest = tuple((s, e - 2 * k) if s == p0 else (s, e) for s, e in mono)
                rest = tuple(t for t in rest if t[1])
                rewritten = rewritten + Poly(table, {rest: c}) * shell ** k
            else:
                kept[mono] = c
        if not changed:
            return poly
        return Poly(table, kept) + rewritten


def proportionality(a: Poly, b: Poly) -> GaussianRational | None:
    """Return ``k`` with ``a == k*b`` (``b`` nonzero), else ``None``."""
    if b.is_zero():
        return None
    mono, cb = next(iter(b.terms.items()))
    k = a.terms.get(mono, ZERO) / cb
    if k and a == b * k:
        return k
    return None
