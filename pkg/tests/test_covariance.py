from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kdpsplit import covariance as cov
from kdpsplit.exact import GaussianRational
from kdpsplit.planewave import OffShellError, make_onshell
from kdpsplit.spinor_calculus import DOWN, UNDOTTED, Spinor, vector_to_spinor
from kdpsplit.symbols import const, field

GR = GaussianRational
G = (1, -1, -1, -1)
F = Fraction


def preserves_metric(lam):
    for a in range(4):
        for b in range(4):
            s = sum((lam[mu][a] * G[mu] * lam[mu][b] for mu in range(4)), GR(0))
            if s != (G[a] if a == b else 0):
                return False
    return True


def test_transform_examples():
    t = cov.make_transform("boost-z", 2)
    assert t.S.constant_rows() == [[GR(2), GR(0)], [GR(0), GR(F(1, 2))]]
    u = GR(F(3, 5), F(4, 5))
    r = cov.make_transform("rot-z", u)
    assert r.S.constant_rows() == [[u, GR(0)], [GR(0), u.conj()]]
    assert r.det() == 1
    x = cov.make_transform("boost-x", F(5, 4), F(3, 4))
    assert x.det() == GR(F(25, 16)) - GR(F(9, 16)) == 1


@pytest.mark.parametrize("args", [("boost-z", 0), ("rot-z", GR(1, 1)), ("boost-x", 2, 1), ("general", 1, 1, 1, 1),
                                  ("shear", 1)])
def test_transform_errors(args):
    with pytest.raises(ValueError):
        cov.make_transform(*args)


def test_induced_lorentz_examples():
    lam = cov.induced_lorentz(cov.make_transform("boost-z", 2))
    assert [lam[0][0], lam[0][3], lam[3][0], lam[3][3]] == [GR(F(17, 8)), GR(F(-15, 8)), GR(F(-15, 8)), GR(F(17, 8))]
    # cosh = (lam^2 + lam^-2)/2, |sinh| = (lam^2 - lam^-2)/2
    assert lam[0][0] == GR((4 + F(1, 4)) / 2) and -lam[0][3] == GR((4 - F(1, 4)) / 2)
    rot = cov.induced_lorentz(cov.make_transform("rot-z", GR(F(3, 5), F(4, 5))))
    assert rot[1][1] == GR(F(-7, 25)) == rot[2][2]
    assert {rot[1][2], rot[2][1]} == {GR(F(24, 25)), GR(F(-24, 25))}
    assert rot[0][0] == 1 and rot[3][3] == 1
    ident = cov.induced_lorentz(cov.make_transform("general", 1, 0, 0, 1))
    assert ident == [[GR(1 if i == j else 0) for j in range(4)] for i in range(4)]


@st.composite
def sl2(draw):
    q = st.fractions(min_value=-4, max_value=4, max_denominator=4)
    a = draw(st.builds(GR, q, q).filter(bool))
    b = draw(st.builds(GR, q, q))
    c = draw(st.builds(GR, q, q))
    return cov.make_transform("general", a, b, c, (1 + b * c) / a)


@settings(max_examples=40, deadline=None)
@given(sl2())
def test_induced_lorentz_preserves_metric(t):
    lam = cov.induced_lorentz(t)
    assert all(x.is_real() for row in lam for x in row)
    assert preserves_metric(lam)


def _grid(z):
    return cov.PolyMatrix(cov.TABLE, [[z[1, 1], z[1, 2]], [z[2, 1], z[2, 2]]])


def _inverse_transpose(t):
    (a, b), (c, d) = t.S.constant_rows()
    return cov.PolyMatrix(cov.TABLE, [[d, -c], [-b, a]])


@settings(max_examples=25, deadline=None)
@given(sl2())
def test_vector_spinor_transformation(t):
    """Lower indices move with S (and S-bar), upper ones with the inverse transpose."""
    up = vector_to_spinor([field(f"v{k}") for k in range(4)])
    low = up.all_down()
    assert _grid(cov.transform_spinor(t, low)) == t.S * _grid(low) * t.S.dagger()
    u = _inverse_transpose(t)
    assert _grid(cov.transform_spinor(t, up)) == u * _grid(up) * u.dagger()
    lam = cov.induced_lorentz(t)
    v = [GR(k + 1, 0) for k in range(4)]
    moved = vector_to_spinor([const(x) for x in cov.apply_lorentz(lam, v)])
    assert _grid(moved) == u * _grid(vector_to_spinor([const(x) for x in v])) * u.dagger()


@settings(max_examples=30, deadline=None)
@given(sl2())
def test_epsilon_and_scalar_invariant(t):
    eps = Spinor(((UNDOTTED, DOWN), (UNDOTTED, DOWN)),
                 {(1, 1): const(0), (1, 2): const(1), (2, 1): const(-1), (2, 2): const(0)})
    assert cov.transform_object(t, eps) == eps
    psi = field("psi")
    assert cov.transform_object(t, psi) == psi


def test_transform_object_rejects_other_types():
    with pytest.raises(TypeError):
        cov.transform_object(cov.make_transform("boost-z", 2), 3)


def test_verify_transform_standard():
    for key, t in cov.standard_transforms().items():
        assert all(r.passed for r in cov.verify_transform(key, t))


def test_constituent_examples():
    std = cov.standard_transforms()
    assert cov.test_constituent_covariance("spin0-dotted1", std["boost-z"]).covariant
    out = cov.test_constituent_covariance("spin0-dotted1", std["boost-x"])
    assert not out.covariant and out.violated
    assert any(not r.is_zero() for r in out.residuals)
    assert cov.test_constituent_covariance("spin0-combined", std["boost-x"]).covariant
    assert cov.test_constituent_covariance("spin1-eta-1", std["rot-z"]).covariant


@st.composite
def zaxis(draw):
    """Products of z-boosts and z-rotations built from Pythagorean triples."""
    m, n = draw(st.integers(1, 4)), draw(st.integers(0, 4))
    u = GR(F(m * m - n * n, m * m + n * n), F(2 * m * n, m * m + n * n))
    lam = draw(st.sampled_from([F(1, 2), 2, 3, F(2, 3), -2]))
    s = cov.make_transform("boost-z", lam).S * cov.make_transform("rot-z", u).S
    return cov.Sl2Transform("z-axis", s)


@settings(max_examples=8, deadline=None)
@given(zaxis(), st.sampled_from(cov.CONSTITUENTS))
def test_constituents_covariant_under_z_axis_group(t, label):
    assert cov.test_constituent_covariance(label, t).covariant


@settings(max_examples=8, deadline=None)
@given(sl2(), st.sampled_from(cov.COMBINED))
def test_combined_systems_covariant_under_general_sl2(t, label):
    mom = make_onshell(2, ("custom", (3, 1, 2, 0)))
    assert cov.test_constituent_covariance(label, t, mom).covariant


def test_off_shell_rejected():
    with pytest.raises(OffShellError):
        make_onshell(1, ("custom", (1, 1, 0, 0)))


def test_verify_covariance_summary():
    results = cov.verify_covariance()
    assert all(r.passed for r in results)
    breaking = [r for r in results if r.id.endswith("boost-x.breaking")]
    assert {r.id.split(".")[1] for r in breaking} == set(cov.CONSTITUENTS)
    assert all(any(v for v in r.detail["violated_lines"]) for r in breaking)
