"""The shared symbol table: momenta, mass, coupling and field components.

Every object built by the package lives in :data:`TABLE`; field symbols are
declared on first use through :func:`field`.
"""

from __future__ import annotations

from .exact import InverseMass, Kind, MassShell, Poly, SymbolTable

TABLE = SymbolTable()

P_SYMBOLS = tuple(TABLE.add(f"p{mu}", Kind.MOMENTUM) for mu in range(4))
M_SYMBOL, M_INV_SYMBOL = TABLE.mass("m", "m_inv")
E_SYMBOL = TABLE.add("e", Kind.PARAMETER)
A_SYMBOLS = tuple(TABLE.add(f"A{mu}", Kind.POTENTIAL) for mu in range(4))

P = tuple(Poly.symbol(TABLE, s) for s in P_SYMBOLS)
M = Poly.symbol(TABLE, M_SYMBOL)
M_INV = Poly.symbol(TABLE, M_INV_SYMBOL)
E = Poly.symbol(TABLE, E_SYMBOL)
A = tuple(Poly.symbol(TABLE, s) for s in A_SYMBOLS)

METRIC = (1, -1, -1, -1)

INVERSE_MASS = InverseMass(M_SYMBOL, M_INV_SYMBOL)


def const(value) -> Poly:
    return Poly.const(TABLE, value)


def field(name: str) -> Poly:
    return Poly.symbol(TABLE, TABLE.add(name, Kind.FIELD))


def parameter(name: str) -> Poly:
    return Poly.symbol(TABLE, TABLE.add(name, Kind.PARAMETER))


def sym(poly: Poly):
    """The symbol behind a single-symbol polynomial."""
    (mono,) = poly.terms
    ((sid, _),) = mono
    return TABLE.symbols[sid]


def minkowski(a, b) -> Poly:
    """``a_mu b^mu`` for upper-index four-vectors."""
    return sum((METRIC[mu] * a[mu] * b[mu] for mu in range(4)), const(0))


P_SQUARED = minkowski(P, P)


def mass_shell(field_poly: Poly) -> MassShell:
    return MassShell(sym(field_poly), P_SYMBOLS, M_SYMBOL)


def numeric_momentum(p, m) -> dict:
    """Substitution map sending the symbolic momenta and mass to numbers."""
    from .exact import GaussianRational

    out = {s: Poly.const(TABLE, GaussianRational.coerce(v)) for s, v in zip(P_SYMBOLS, p)}
    m = GaussianRational.coerce(m)
    out[M_SYMBOL] = Poly.const(TABLE, m)
    if m:
        out[M_INV_SYMBOL] = Poly.const(TABLE, m.inverse())
    return out
