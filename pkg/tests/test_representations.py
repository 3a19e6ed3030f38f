import json

import pytest
import sympy

from kdpsplit.exact import I, PolyMatrix
from kdpsplit.representations import (
    REPRESENTATION_NAMES, RHO_FAMILIES, build, build_beta, build_gamma, build_hagen_hurley, build_rho, mass_content,
    verify_gamma, verify_kdp_algebra, verify_no_similarity, verify_rho_conjugation, verify_tzou,
)
from kdpsplit.symbols import M, P_SQUARED, TABLE

p = sympy.symbols("p0:4")
m = sympy.Symbol("m")
G = (1, -1, -1, -1)


def sym_matrices(rep):
    d = rep.to_dict()
    return [sympy.Matrix([[sympy.sympify(e, locals={"i": sympy.I}) for e in row] for row in d["entries"][f"mu{k}"]])
            for k in range(4)]


def sym_operator(rep):
    mats = sym_matrices(rep)
    return sum((mats[k] * G[k] * p[k] for k in range(4)), sympy.zeros(rep.dim, rep.dim))


def lit(rows):
    return PolyMatrix(TABLE, rows)


# -- literal matrices ---------------------------------------------------------------


def test_rho_s0_literal():
    r = build_rho("s0")
    assert r.mu[0] == lit([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
    assert r.mu[1] == lit([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    assert r.mu[2] == lit([[0, 0, 0], [0, 0, -I], [0, -I, 0]])
    assert r.mu[3] == lit([[0, 0, -1], [0, 0, 0], [1, 0, 0]])


def test_rho_s0_tilde_literal():
    r = build_rho("s0-tilde")
    assert r.mu[0] == lit([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert r.mu[2] == lit([[0, 0, I], [0, 0, 0], [I, 0, 0]])


def test_rho_s1_eta_literal():
    r = build_rho("s1-eta")
    assert r.mu[0] == lit([[0, 0, 0], [0, 0, -1], [0, -1, 0]])
    assert r.mu[2] == lit([[0, 0, I], [0, 0, 0], [I, 0, 0]])
    t = build_rho("s1-eta-tilde")
    assert t.mu[3] == lit([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])


def test_chi_families_are_conjugates():
    for a, b in (("s1-eta", "s1-chi"), ("s1-eta-tilde", "s1-chi-tilde")):
        assert all(build_rho(a).mu[k].conj() == build_rho(b).mu[k] for k in range(4))
    assert verify_rho_conjugation().passed


def test_rho_s0_cube():
    r0 = build_rho("s0").mu[0]
    assert r0 * r0 * r0 == r0


# -- derived beta matrices against hand-written component equations (sympy oracle) ----


def test_beta_spin0_reproduces_component_equations():
    rep = build_beta(0)
    vec = sympy.symbols("v0:4")
    s = sympy.Symbol("s")
    lhs = sym_operator(rep) * sympy.Matrix([*vec, s])
    want = [p[mu] * s for mu in range(4)] + [sum(G[n] * p[n] * vec[n] for n in range(4))]
    assert [sympy.expand(a - b) for a, b in zip(lhs, want)] == [0] * 5
    assert rep.mu[0].nnz() == 2


def test_beta_spin1_reproduces_component_equations():
    rep = build_beta(1)
    pairs = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))
    tens = sympy.symbols("t0:6")
    vec = sympy.symbols("v0:4")

    def t(a, b):
        if a == b:
            return 0
        if (a, b) in pairs:
            return tens[pairs.index((a, b))]
        return -tens[pairs.index((b, a))]

    lhs = sym_operator(rep) * sympy.Matrix([*tens, *vec])
    want = [p[a] * vec[b] - p[b] * vec[a] for a, b in pairs]
    want += [sum(G[mu] * p[mu] * t(mu, nu) for mu in range(4)) for nu in range(4)]
    assert [sympy.expand(x - y) for x, y in zip(lhs, want)] == [0] * 10


def test_gamma_blocks():
    g = build_gamma()
    assert g.mu[3] == lit([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
    ident = PolyMatrix.identity(TABLE, 4)
    assert g.mu[0] * g.mu[0] == ident
    assert g.mu[3] * g.mu[3] == -ident
    assert g.extras["gamma5"] == PolyMatrix.diag(TABLE, [1, 1, -1, -1])
    assert all(r.passed for r in verify_gamma())


# -- algebras --------------------------------------------------------------------------


@pytest.mark.parametrize("spin", [0, 1])
def test_kdp_algebra(spin):
    res = verify_kdp_algebra(build_beta(spin))
    assert res.passed and res.detail["triples"] == 64


def test_kdp_algebra_equal_indices():
    b0 = build_beta(0).mu[0]
    assert b0 * b0 * b0 * 2 == b0 * 2


@pytest.mark.parametrize("name", [f"rho-{f}" for f in RHO_FAMILIES] + ["hh-eta", "hh-chi"])
def test_tzou(name):
    assert verify_tzou(build(name)).passed


def test_tzou_against_numeric_oracle():
    """Symmetrised triple products recomputed with sympy for one family."""
    import itertools
    mats = sym_matrices(build_hagen_hurley("undotted-eta"))
    n = mats[0].shape[0]
    g = lambda a, b: G[a] if a == b else 0  # noqa: E731
    for t in itertools.product(range(4), repeat=3):
        lhs = sympy.zeros(n, n)
        rhs = sympy.zeros(n, n)
        for a, b, c in itertools.permutations(t):
            lhs += mats[a] * mats[b] * mats[c]
            rhs += g(a, b) * mats[c]
        assert lhs == rhs


def test_no_similarity():
    assert verify_no_similarity(build_rho("s0"), build_rho("s0-tilde")).passed
    assert verify_no_similarity(build_rho("s1-eta"), build_rho("s1-eta-tilde")).passed
    same = verify_no_similarity(build_rho("s0"), build_rho("s0"), expect_similar=True)
    assert same.passed and same.detail["det"] != "0"


def test_mass_content():
    for fam in ("s0", "s0-tilde"):
        assert mass_content(build_rho(fam)) == M * (P_SQUARED - M * M)
    assert mass_content(build_gamma()) == (P_SQUARED - M * M) ** 2


def test_mass_content_oracle():
    op = sym_operator(build_rho("s0")) - m * sympy.eye(3)
    pp = p[0] ** 2 - p[1] ** 2 - p[2] ** 2 - p[3] ** 2
    assert sympy.expand(op.det() - m * (pp - m**2)) == 0


# -- negative controls -------------------------------------------------------------------


@pytest.mark.parametrize("name", ["beta-spin0", "rho-s0", "hh-chi"])
def test_perturbed_matrices_fail(name):
    rep = build(name).perturbed(0, 0, 0)
    check = verify_kdp_algebra(rep) if name.startswith("beta") else verify_tzou(rep)
    assert check.status == "fail"
    assert any(r != "0" for r in check.residuals)


# -- dump ---------------------------------------------------------------------------------


@pytest.mark.parametrize("name", REPRESENTATION_NAMES)
def test_dump_roundtrip(name):
    rep = build(name)
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["name"] == name and d["dimension"] == rep.dim
    assert [len(d["entries"][f"mu{k}"]) for k in range(4)] == [rep.dim] * 4
    assert rep.to_text().startswith(f"name: {name}\ndimension: {rep.dim}\n")


def test_beta_spin1_dimension():
    assert build("beta-spin1").dim == 10
    assert build("hh-eta").dim == 7
