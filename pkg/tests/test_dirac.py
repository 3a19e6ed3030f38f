import itertools

import pytest
import sympy

from kdpsplit import dirac_subsolutions as ds
from kdpsplit.exact import PolyMatrix
from kdpsplit.spinor_calculus import pm
from kdpsplit.split_spin0 import PSI, psi
from kdpsplit.symbols import E_SYMBOL, M, P, TABLE, const

SIGNS = list(itertools.product((1, -1), repeat=4))


def entries(m):
    return [e for row in m.entries for e in row]


def sympy_gammas():
    """Spinor-representation gammas assembled from Pauli blocks with sympy."""
    s = [sympy.eye(2), sympy.Matrix([[0, 1], [1, 0]]), sympy.Matrix([[0, -sympy.I], [sympy.I, 0]]),
         sympy.Matrix([[1, 0], [0, -1]])]
    z = sympy.zeros(2)
    g = [sympy.BlockMatrix([[z, s[0]], [s[0], z]]).as_explicit()]
    g += [sympy.BlockMatrix([[z, -s[j]], [s[j], z]]).as_explicit() for j in (1, 2, 3)]
    g5 = sympy.diag(1, 1, -1, -1)
    return g, g5


def test_gammas_match_sympy_oracle():
    g, g5 = sympy_gammas()
    ours = ds.gammas()
    for k in range(4):
        assert sympy.Matrix([[sympy.sympify(str(e), locals={"i": sympy.I}) for e in row] for row in ours[k].entries]) == g[k]


def test_projector_formula_oracle():
    g, g5 = sympy_gammas()
    p4 = (3 * sympy.eye(4) + g5 - g[0] * g[3] + sympy.I * g[1] * g[2]) / 4
    assert p4 == sympy.diag(1, 1, 1, 0)
    assert ds.p4_gamma_formula() == PolyMatrix.diag(TABLE, [1, 1, 1, 0])
    assert ds.build_projector(1).matrix == PolyMatrix.diag(TABLE, [0, 1, 1, 1])
    for k in (1, 2, 3, 4):
        pk = ds.build_projector(k).matrix
        assert pk * pk == pk
    with pytest.raises(ValueError):
        ds.build_projector(5)


def test_generator_commutation_pattern():
    g, _ = sympy_gammas()
    p4 = sympy.diag(1, 1, 1, 0)
    zero = [(mu, nu) for mu, nu in itertools.combinations(range(4), 2)
            if (p4 * g[mu] * g[nu] - g[mu] * g[nu] * p4) == sympy.zeros(4)]
    assert zero == [(0, 3), (1, 2)]
    res = {r.id: r for r in ds.verify_generator_commutation()}
    assert all(r.passed for r in res.values())
    assert len(res["dirac.generators.noncommuting"].detail["nonzero_entries"]) == 4


def test_eq_a_operator_is_printed_matrix():
    d = ds.build_dirac_embedding("spin0-dotted1")
    assert d.operator == ds.EQ_A_MATRIX
    assert d.signs == ds.EQ_A_SIGNS
    assert d.state == (psi(1, 1), psi(2, 1), PSI, const(0))
    assert d.residuals()[0] == (P[0] + P[3]) * PSI - M * psi(1, 1)
    row4 = d.residuals()[3]
    assert row4 == (-P[1] - ds.I * P[2]) * psi(1, 1) + (P[0] + P[3]) * psi(2, 1)
    assert row4 == pm("^1^1") * psi(2, 1) - pm("^2^1") * psi(1, 1)


def test_eq_b_sign_pattern():
    d = ds.build_dirac_embedding("spin0-dotted2")
    assert d.signs == ds.EQ_B_SIGNS
    assert d.operator == ds.EQ_B_MATRIX
    assert d.state[:2] == (psi(2, 2), psi(1, 2))


@pytest.mark.parametrize("which", ds.EMBEDDINGS)
def test_embedding_rows(which):
    res = ds.verify_embedding(which)
    assert all(r.passed for r in res), [(r.id, r.residuals) for r in res if not r.passed]
    d = ds.build_dirac_embedding(which)
    assert d.state[3] == const(0)
    zero = {x: 0 for s in d.state for x in s.symbols()}
    assert all(r.subs(zero).is_zero() for r in d.residuals())


@pytest.mark.parametrize("which", ds.EMBEDDINGS)
def test_each_embedding_has_four_forms(which):
    forms = ds.embedding_forms(which)
    assert len(forms) == 4
    assert ds.build_dirac_embedding(which) in forms


def test_conjugate_of_eq_a():
    c = ds.conjugate_dirac(ds.build_dirac_embedding("spin0-dotted1"))
    assert c.operator == -ds.EQ_A_STAR_MATRIX
    assert tuple(-s for s in c.signs) == (1, -1, 1, -1)
    assert all(r.passed for r in ds.verify_conjugation())


@pytest.mark.parametrize("signs", SIGNS)
def test_charge_identity_for_every_pattern(signs):
    """gamma^3 conj(O_s) = O_t gamma^3 for all sixteen sign patterns."""
    g3 = ds.gammas()[3]
    op = ds.dirac_operator(signs)
    t = ds.charge_partner_signs(signs)
    assert g3 * op.conj() == ds.dirac_operator(t) * g3
    assert ds.charge_partner_signs(t) == tuple(signs)


def test_charge_matrix():
    g = ds.gammas()
    c = ds.charge_matrix()
    assert c * g[0] == g[3]


def test_charge_partners():
    assert ds.charge_partner_signs(ds.EQ_A_SIGNS) == ds.EQ_B_SIGNS
    pairs = ds.charge_pairs()
    assert pairs["spin0-dotted1"] == ["spin0-dotted2"]
    assert pairs["spin1-eta-1"] == ["spin1-eta-2"]
    assert pairs["spin1-chi-1"] == ["spin1-chi-2"]
    partner, c = ds.charge_conjugate(ds.build_dirac_embedding("spin0-dotted1"))
    assert partner.signs == ds.EQ_B_SIGNS
    assert all(r.passed for r in ds.verify_charge_conjugation())


@pytest.mark.parametrize("which", ds.EMBEDDINGS)
def test_projection(which):
    assert all(r.passed for r in ds.verify_projection(which))


def test_projected_systems_for_eq_a():
    d = ds.build_dirac_embedding("spin0-dotted1")
    upper, lower = ds.project_decompose(d, ds.build_projector(4))
    assert upper.residuals()[3].is_zero()
    assert lower.residuals()[:3] == [const(0)] * 3
    assert lower.residuals()[3] == d.residuals()[3]


def test_minimal_coupling():
    results = ds.verify_minimal_coupling()
    status = {r.id: r.status for r in results}
    assert status["coupling.mass.dotted-1"] == "not-applicable"
    assert status["coupling.mass.dotted-2"] == "not-applicable"
    assert all(s == "pass" for k, s in status.items() if not k.startswith("coupling.mass"))
    d = ds.build_dirac_embedding("spin0-dotted1")
    coupled = ds.minimal_coupling(d)
    assert coupled.operator != d.operator
    assert coupled.operator.subs({E_SYMBOL: 0}) == d.operator


def test_coupled_mass_leftover_is_nonzero():
    r = ds.coupled_mass_check("dotted-1")
    assert r.status == "not-applicable" and r.residuals[0] != "0"
