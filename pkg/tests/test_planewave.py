from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kdpsplit import planewave as pw
from kdpsplit.exact import GaussianRational

GR = GaussianRational
F = Fraction


def test_make_onshell_examples():
    assert pw.make_onshell(3, ("rest",)).p == (GR(3), GR(0), GR(0), GR(0))
    mom = pw.make_onshell(4, ("boost-z", 2, 1))
    assert mom.p == (GR(F(20, 3)), GR(0), GR(0), GR(F(16, 3)))
    assert pw.make_onshell(4, ("custom", (5, 3, 0, 0))).m == 4


@pytest.mark.parametrize("m, gen", [(1, ("custom", (1, 1, 0, 0))), (0, ("rest",)), (-2, ("rest",)),
                                    (1.5, ("rest",)), (2, ("boost-z", 1, 2)), (2, ("spiral",))])
def test_make_onshell_rejects(m, gen):
    with pytest.raises((ValueError, TypeError)):
        pw.make_onshell(m, gen)


def test_off_shell_message():
    with pytest.raises(pw.OffShellError, match="-1"):
        pw.make_onshell(1, ("custom", (1, 1, 0, 0)))


def _sympy_nullity(rows):
    mat = sympy.Matrix([[sympy.Rational(x.re.numerator, x.re.denominator)
                         + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator) for x in r] for r in rows])
    return mat.shape[1] - mat.rank()


@pytest.mark.parametrize("label", pw.SOLVE_LABELS)
def test_nullity_per_system(label):
    for mom in pw.default_momenta():
        sol = pw.solve(label, mom)
        assert sol.nullity == pw.EXPECTED_NULLITY[label]
        assert all(r == 0 for r in pw.solution_residuals(sol))
    rows, _ = pw.wave_matrix(label, pw.default_momenta()[3])
    assert _sympy_nullity(rows) == pw.EXPECTED_NULLITY[label]


def test_kdp_spin0_basis_is_p_over_m():
    mom = pw.make_onshell(4, ("custom", (5, 3, 0, 0)))
    sol = pw.solve("kdp-spin0", mom)
    (v,) = sol.basis
    psi = v[4]
    assert psi != 0
    # upper-index components equal p^mu psi / m
    assert list(v[:4]) == [x * psi / mom.m for x in mom.p]
    assert "nullity: 1" in sol.dump()


def test_kdp_spin1_solutions_transverse():
    mom = pw.make_onshell(4, ("custom", (5, 3, 0, 0)))
    sol = pw.solve("kdp-spin1", mom)
    assert sol.nullity == 3
    assert pw.verify_transversality([mom]).passed


def test_embed_spin0():
    rest = pw.make_onshell(2, ("rest",))
    assert pw.embed_spin0([0, 0, 0], rest) == [GR(0)] * 5
    v = pw.embed_spin0(pw.solve("rho-s0", rest).basis[0], rest)
    assert v[0] == v[4] and v[1:4] == [GR(0)] * 3
    for mom in pw.default_momenta():
        for b in pw.solve("rho-s0", mom).basis:
            assert all(r.is_zero() for r in pw.kdp_spin0_residuals(pw.embed_spin0(b, mom), mom))


def test_verify_planewave_passes():
    res = pw.verify_planewave()
    assert res and all(r.passed for r in res), [r.id for r in res if not r.passed]
    split = {r.id: r for r in res}["planewave.split-accounting.eta"]
    assert split.detail["split"] == [3] * len(pw.default_momenta())


def test_count_degrees_needs_three_momenta():
    with pytest.raises(ValueError):
        pw.count_degrees(pw.default_momenta()[:2])


def test_unknown_system():
    with pytest.raises(ValueError):
        pw.representation_for("kdp-spin2")


@st.composite
def onshell(draw):
    m = draw(st.sampled_from([1, 2, 3, F(1, 2), F(5, 3)]))
    a = draw(st.integers(2, 6))
    b = draw(st.integers(1, a - 1))
    return pw.make_onshell(m, (draw(st.sampled_from(["boost-z", "boost-x"])), a, b))


@settings(max_examples=10, deadline=None)
@given(onshell(), st.sampled_from(pw.SOLVE_LABELS))
def test_nullity_is_momentum_independent(mom, label):
    sol = pw.solve(label, mom)
    assert sol.nullity == pw.EXPECTED_NULLITY[label]
    assert all(r == 0 for r in pw.solution_residuals(sol))


@settings(max_examples=5, deadline=None)
@given(st.lists(onshell(), min_size=1, max_size=2))
def test_reconstruction_on_random_momenta(moms):
    assert all(r.passed for r in pw.verify_reconstruct_spin1(moms))
    assert all(r.passed for r in pw.verify_embed_spin0(moms))
