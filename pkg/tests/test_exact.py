from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from kdpsplit.exact import (
    I, GaussianRational, Kind, Poly, PolyMatrix, SymbolTable, determinant, format_rational, nullspace,
    parse_rational, rank,
)
from kdpsplit.exact.linalg import mat_vec
from kdpsplit.symbols import INVERSE_MASS, M, M_INV, P, TABLE, field, mass_shell

GR = GaussianRational

small = st.fractions(min_value=-10, max_value=10, max_denominator=10)
gauss = st.builds(GR, small, small)


def to_sympy(z: GR):
    return sympy.Rational(z.re.numerator, z.re.denominator) + sympy.I * sympy.Rational(z.im.numerator, z.im.denominator)


# -- scalars -----------------------------------------------------------------------


def test_gaussian_examples():
    assert (GR(1, 1) * GR(1, -1)) == GR(2)
    u = GR(Fraction(3, 5), Fraction(4, 5))
    assert u * u.conj() == GR(1)
    assert u * u == GR(Fraction(-7, 25), Fraction(24, 25))
    assert str(GR(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4*i"
    assert GR.parse("1/2-3/4*i") == GR(Fraction(1, 2), Fraction(-3, 4))


def test_parse_rational_rejects_floats():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ("1.5", "1e3", "1/", "a", "", "0.5/2"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(small)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    if a:
        assert a * a.inverse() == GR(1)
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(gauss)
def test_canonical_denominators(a):
    for q in (a.re, a.im):
        assert q.denominator > 0
        assert Fraction(q.numerator, q.denominator) == q


# -- polynomials -------------------------------------------------------------------

_T = SymbolTable()
_NAMES = ("x", "y", "z")
_SYMS = [_T.add(n, Kind.FIELD) for n in _NAMES]
_SP = {n: sympy.Symbol(n) for n in _NAMES}


@st.composite
def poly_pair(draw, depth=3):
    """A random expression built in parallel as a Poly and a sympy expression."""
    if depth == 0 or draw(st.booleans()):
        if draw(st.booleans()):
            z = draw(gauss)
            return Poly.const(_T, z), to_sympy(z)
        n = draw(st.sampled_from(_NAMES))
        return Poly.symbol(_T, _T[n]), _SP[n]
    (a, sa), (b, sb) = draw(poly_pair(depth - 1)), draw(poly_pair(depth - 1))
    op = draw(st.sampled_from("+-*"))
    if op == "+":
        return a + b, sa + sb
    if op == "-":
        return a - b, sa - sb
    return a * b, sa * sb


def poly_to_sympy(p: Poly):
    return sympy.sympify(str(p).replace("^", "**"), locals={"i": sympy.I, **_SP})


@settings(max_examples=150)
@given(poly_pair())
def test_poly_matches_sympy_expansion(pair):
    p, s = pair
    assert sympy.expand(poly_to_sympy(p) - s) == 0
    assert p.is_zero() == (sympy.expand(s) == 0)


@given(poly_pair(), poly_pair(), poly_pair())
def test_ring_axioms(a, b, c):
    a, b, c = a[0], b[0], c[0]
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a + Poly.const(_T, 0) == a


@given(poly_pair(), poly_pair())
def test_conjugation_is_multiplicative(a, b):
    a, b = a[0], b[0]
    assert (a * b).conj() == a.conj() * b.conj()


def test_conjugation_by_kind():
    x = field("x")
    assert P[0].conj() == -P[0]
    assert M.conj() == M
    assert str((I * x).conj()) == "-1*i*x^star"
    assert x.conj().conj() == x


def test_light_cone_product():
    lhs = (P[0] - P[3]) * (P[0] + P[3]) + (-P[1] + I * P[2]) * (P[1] + I * P[2])
    assert lhs == P[0] ** 2 - P[1] ** 2 - P[2] ** 2 - P[3] ** 2
    assert str(lhs) == "p0^2 - p1^2 - p2^2 - p3^2"


def test_reduction_rules():
    eta = field("eta_red")
    kg = P[0] ** 2 * eta - (P[1] ** 2 + P[2] ** 2 + P[3] ** 2) * eta
    assert kg.reduce([mass_shell(eta)]) == M * M * eta
    x = field("x")
    assert (M * M_INV * x).reduce([INVERSE_MASS]) == x
    once = kg.reduce([mass_shell(eta), INVERSE_MASS])
    assert once.reduce([mass_shell(eta), INVERSE_MASS]) == once


_ETA = field("eta_red")
_X = field("x")
_MONOS = [P[i] * P[j] * _ETA for i in range(4) for j in range(i, 4)] + [P[i] * _X for i in range(4)] + [
    M * M_INV * _ETA, M * M_INV * P[0] * P[0] * _ETA]


@st.composite
def momentum_poly(draw):
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(_MONOS), max_size=len(_MONOS)))
    return sum((c * mono for c, mono in zip(coeffs, _MONOS)), Poly.const(TABLE, 0))


@given(momentum_poly(), momentum_poly())
def test_reduce_is_additive_and_idempotent(a, b):
    rules = [mass_shell(_ETA), INVERSE_MASS]
    ra = a.reduce(rules)
    assert ra.reduce(rules) == ra
    assert (a + b).reduce(rules) == ra + b.reduce(rules)
    p0, eta = TABLE["p0"].id, TABLE["eta_red"].id
    assert not any(dict(mono).get(p0, 0) >= 2 and dict(mono).get(eta) for mono in ra.terms)


def test_mixed_tables_rejected():
    other = SymbolTable()
    q = Poly.symbol(other, other.add("q", Kind.FIELD))
    with pytest.raises(ValueError):
        _ = q + field("x")


# -- matrices and linear algebra -----------------------------------------------------


def test_matrix_examples():
    a = PolyMatrix(TABLE, [[1, P[0]], [I, 2]])
    assert a * PolyMatrix.identity(TABLE, 2) == a
    assert a.conj().transpose() == a.dagger()
    with pytest.raises(ValueError):
        _ = a + PolyMatrix.identity(TABLE, 3)
    assert nullspace(PolyMatrix.zeros(TABLE, 2).constant_rows()) == [[GR(1), GR(0)], [GR(0), GR(1)]]
    assert nullspace(PolyMatrix.identity(TABLE, 3).constant_rows()) == []
    assert determinant(PolyMatrix.identity(TABLE, 3)) == Poly.const(TABLE, 1)
    assert determinant(PolyMatrix(TABLE, [[P[0], M], [0, 0]])).is_zero()
    with pytest.raises(ValueError):
        determinant(PolyMatrix.zeros(TABLE, 2, 3))


def test_nullspace_rejects_symbolic_entries():
    with pytest.raises((TypeError, ValueError)):
        nullspace(PolyMatrix(TABLE, [[P[0], 1]]))


@st.composite
def gaussian_matrix(draw):
    """Random n x c matrix of rank at most k, built as a product so that deficient ranks are common."""
    n = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    k = draw(st.integers(0, min(n, c)))
    left = [[draw(gauss) for _ in range(k)] for _ in range(n)]
    right = [[draw(gauss) for _ in range(c)] for _ in range(k)]
    return [[sum((left[i][t] * right[t][j] for t in range(k)), GR(0)) for j in range(c)] for i in range(n)]


def sympy_rank(rows):
    dm = DomainMatrix.from_Matrix(sympy.Matrix([[to_sympy(x) for x in r] for r in rows])).convert_to(QQ_I)
    return dm.rank()


@settings(max_examples=100, deadline=None)
@given(gaussian_matrix())
def test_rank_and_nullspace_against_sympy(rows):
    r = rank(rows)
    assert r == sympy_rank(rows)
    basis = nullspace(rows)
    assert len(basis) + r == len(rows[0])
    for v in basis:
        assert all(x == 0 for x in mat_vec(rows, v))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(gauss, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_against_sympy(rows):
    ours = determinant(PolyMatrix(TABLE, rows)).constant_value()
    theirs = sympy.expand(sympy.Matrix([[to_sympy(x) for x in r] for r in rows]).det())
    assert to_sympy(ours) == theirs


def test_symbolic_determinant_against_sympy():
    from kdpsplit.representations import build_rho
    op = build_rho("s0").wave_operator()
    ours = determinant(op)
    p0, p1, p2, p3, m = sympy.symbols("p0 p1 p2 p3 m")
    loc = {"p0": p0, "p1": p1, "p2": p2, "p3": p3, "m": m, "i": sympy.I}
    mat = sympy.Matrix([[sympy.sympify(str(e).replace("^", "**"), locals=loc) for e in row] for row in op.entries])
    assert sympy.expand(mat.det() - sympy.sympify(str(ours).replace("^", "**"), locals=loc)) == 0
    assert sympy.expand(mat.det() - m * (p0**2 - p1**2 - p2**2 - p3**2 - m**2)) == 0
