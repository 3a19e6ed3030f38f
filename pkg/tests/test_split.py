"""Spin-0 and spin-1 splittings into three-component systems."""

import pytest

from kdpsplit import split_spin0 as s0
from kdpsplit import split_spin1 as s1
from kdpsplit.spinor_calculus import pm
from kdpsplit.symbols import INVERSE_MASS, M, M_INV, P, P_SQUARED


def all_pass(results):
    bad = [(r.id, r.residuals) for r in results if not r.passed]
    assert results and not bad, bad


# -- spin 0 ----------------------------------------------------------------------------


def test_spin0_spinor_system_lines():
    sys5 = s0.build_spin0_spinor_system()
    assert len(sys5) == 5
    assert sys5[0].lhs == (P[0] + P[3]) * s0.PSI
    assert sys5[0].rhs == M * s0.psi(1, 1)
    assert sys5[4].rhs == 2 * M * s0.PSI


def test_spin0_spinor_system_zero_scalar_forces_zero():
    sys5 = s0.build_spin0_spinor_system()
    sub = {s0.PSI: 0}
    for a, b in s0.IDX[:4]:
        sub[s0.psi(a, b)] = 0
    assert all(r.subs(sub).is_zero() for r in sys5.residuals())
    # psi = 0 leaves m psi^{AB'} = 0 in the first four lines
    only_scalar_zero = [r.subs({s0.PSI: 0}) for r in sys5.residuals()[:4]]
    assert only_scalar_zero == [-M * s0.psi(a, b) for a, b in s0.IDX]


def test_constituent_dotted1_lines():
    c = s0.build_constituent0(s0.DOTTED_1)
    lines = list(c.system)
    assert lines[0].lhs == pm("^1^1") * s0.PSI and lines[0].rhs == M * s0.psi(1, 1)
    assert lines[1].lhs == pm("^2^1") * s0.PSI and lines[1].rhs == M * s0.psi(2, 1)
    assert lines[2].lhs == pm("_1_1") * s0.psi(1, 1) + pm("_2_1") * s0.psi(2, 1)
    assert c.matrix_form().name == "rho-s0"
    assert s0.build_constituent0(s0.DOTTED_2).matrix_form().name == "rho-s0-tilde"


def test_unknown_half_rejected():
    with pytest.raises(ValueError):
        s0.build_constituent0("dotted-3")


@pytest.mark.parametrize("half", s0.HALVES)
def test_constituent_mass(half):
    assert s0.verify_constituent_mass(half).passed
    c = s0.build_constituent0(half)
    raw = (M * c.system[2].residual.subs(s0._first_lines_solved(c))).reduce([INVERSE_MASS])
    assert raw == P_SQUARED * s0.PSI - M * M * s0.PSI


@pytest.mark.parametrize("half", s0.HALVES)
def test_wrong_sign_mass_check_fails(half):
    res = s0.verify_constituent_mass(half, wrong_sign=True)
    assert res.status == "fail" and res.residuals != ["0"]


@pytest.mark.parametrize("half", s0.HALVES)
def test_identity0(half):
    all_pass(s0.verify_identity0(half))


def test_identity0_is_a_commutator():
    h = 1
    direct = pm(f"^2^{h}") * (M_INV * pm(f"^1^{h}")) - pm(f"^1^{h}") * (M_INV * pm(f"^2^{h}"))
    assert direct.is_zero()


def test_spin0_forms_and_implication():
    all_pass(s0.verify_spinor_form0() + s0.verify_matrix_forms0() + s0.verify_constituents_imply_kdp0())


def test_reverse_inclusion_outcomes():
    res = {r.id: r for r in s0.verify_reverse_inclusion0()}
    assert all(r.passed for r in res.values())
    indep = res["spin0.reverse.independent-copies"].detail
    assert indep["block_nullity"] == 2 and indep["kdp_nullity"] == 1
    assert indep["violated_lines"]


# -- spin 1 ----------------------------------------------------------------------------


def test_spin1_spinor_group_lines():
    sys = s1.build_spin1_spinor_system()
    first = sys[0]
    assert first.lhs == 2 * (pm("_1^1") * s1.zeta(1, 1) + pm("_1^2") * s1.zeta(1, 2))
    assert first.rhs == 2 * M * s1.ETA[0]
    assert len(s1.ETA) == 3 and len(s1.CHI) == 3


def test_constituent_first_lines():
    eta1 = s1.build_constituent1("eta-1")
    assert eta1.system[0].lhs == pm("^1_1") * s1.ETA[0]
    assert eta1.system[0].rhs == -M * s1.zetahat(1, 1)
    chi1 = s1.build_constituent1("chi-1")
    assert chi1.system[0].lhs == pm("_1^1") * s1.CHI[0]
    assert chi1.system[0].rhs == -M * s1.zetacheck(1, 1)
    assert s1.scalar_equation(s1.UNDOTTED_ETA).residual == P_SQUARED * s1.ETA[1] - M * M * s1.ETA[1]
    with pytest.raises(ValueError):
        s1.build_constituent1("eta-3")


def test_tensor_constants_are_reported():
    res = s1.verify_spinor_tensor_equivalence_spin1()
    all_pass(res)
    assert res[0].detail == {"a": "-1/4", "b": "-1/4"}


def test_hagen_hurley_expansion_has_eight_lines():
    for ch in s1.CHIRALITIES:
        half = s1.build_hagen_hurley_half(ch)
        assert len(half.expansion) == 8
        assert s1.verify_hh_expansion(ch).passed


@pytest.mark.parametrize("ch", s1.CHIRALITIES)
def test_split_equivalence(ch):
    res = s1.verify_split_equivalence1(ch)
    assert {r.id.rsplit(".", 1)[1] for r in res} >= {"lines", "identities", "identity-sum", "identity-difference",
                                                      "restore"}
    all_pass(res)
    all_pass(s1.verify_spin1_condition(ch))


@pytest.mark.parametrize("kind", ["hat", "check"])
def test_hat_transforms_invert(kind):
    all_pass(s1.verify_transform_roundtrip(kind))


def test_hat_transform_pairs_with_chirality():
    (a, b), scalar = s1.apply_hat_transform(s1.build_hagen_hurley_half(s1.UNDOTTED_ETA))
    assert (a.label, b.label) == ("eta-1", "eta-2")
    (c, d), _ = s1.apply_hat_transform(s1.build_hagen_hurley_half(s1.DOTTED_CHI))
    assert (c.label, d.label) == ("chi-1", "chi-2")


def test_spin1_matrix_forms_and_implication():
    all_pass(s1.verify_matrix_forms1() + s1.verify_hh_matrix_forms() + s1.verify_hh_implies_kdp1())
