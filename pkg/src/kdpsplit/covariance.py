"""SL(2,C) action on spinor-indexed objects and solution-level covariance tests.

Convention: a lower undotted index transforms as ``x'_A = S_A^B x_B`` and a
lower dotted index with the entrywise conjugate ``S-bar``; other placements
are moved down with eps, transformed, and moved back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .checks import CheckResult, bool_check, zero_check
from .exact import EquationSystem, GaussianRational, Poly, PolyMatrix, determinant, nullspace
from .planewave import OnShellMomentum, make_onshell
from .spinor_calculus import DOTTED, DOWN, UNDOTTED, UP, Spinor, spinor_to_vector, vector_to_spinor
from .symbols import INVERSE_MASS, METRIC, P, TABLE, const
from .symbols import field as field_symbol

GR = GaussianRational


@dataclass(frozen=True)
class Sl2Transform:
    name: str
    S: PolyMatrix

    def __post_init__(self):
        if not self.S.is_constant() or self.S.shape != (2, 2):
            raise ValueError("S must be a constant 2x2 matrix")
        if self.det() != 1:
            raise ValueError(f"{self.name}: det S = {self.det()}, expected 1")

    @property
    def S_bar(self) -> PolyMatrix:
        return self.S.conj()

    def det(self) -> GaussianRational:
        (a, b), (c, d) = self.S.constant_rows()
        return a * d - b * c


def _matrix(rows) -> PolyMatrix:
    return PolyMatrix(TABLE, [[const(GR.coerce(x)) for x in r] for r in rows])


def make_transform(kind: str, *params) -> Sl2Transform:
    """``boost-z(lam)``, ``rot-z(u)``, ``boost-x(c, s)`` or ``general(a, b, c, d)``."""
    vals = [GR.coerce(x) for x in params]
    label = f"{kind}({','.join(map(str, vals))})"
    if kind == "boost-z":
        (lam,) = vals
        if not lam or not lam.is_real():
            raise ValueError("boost-z needs a nonzero rational")
        rows = [[lam, 0], [0, lam.inverse()]]
    elif kind == "rot-z":
        (u,) = vals
        if u * u.conj() != 1:
            raise ValueError(f"rot-z needs |u|^2 = 1, got {u * u.conj()}")
        rows = [[u, 0], [0, u.conj()]]
    elif kind == "boost-x":
        c, s = vals
        if not (c.is_real() and s.is_real()) or c * c - s * s != 1:
            raise ValueError("boost-x needs real c, s with c^2 - s^2 = 1")
        rows = [[c, s], [s, c]]
    elif kind == "general":
        a, b, c, d = vals
        rows = [[a, b], [c, d]]
    else:
        raise ValueError(f"unknown transform kind {kind!r}")
    return Sl2Transform(label, _matrix(rows))


STANDARD = {
    "boost-z": ("boost-z", 2),
    "rot-z": ("rot-z", GR(Fraction(3, 5), Fraction(4, 5))),
    "boost-x": ("boost-x", Fraction(5, 4), Fraction(3, 4)),
}


def standard_transforms() -> dict[str, Sl2Transform]:
    return {k: make_transform(*v) for k, v in STANDARD.items()}


def transform_spinor(t: Sl2Transform, x: Spinor) -> Spinor:
    positions = [pos for _, pos in x.slots]
    y = x.all_down()
    mats = {UNDOTTED: t.S.constant_rows(), DOTTED: t.S_bar.constant_rows()}
    for k, (chir, _) in enumerate(y.slots):
        mat = mats[chir]
        comps = {}
        for idx in y.comps:
            total = const(0)
            for b in (1, 2):
                c = mat[idx[k] - 1][b - 1]
                if c:
                    total = total + y.comps[idx[:k] + (b,) + idx[k + 1:]] * c
            comps[idx] = total
        y = Spinor(y.slots, comps)
    return y.with_positions(positions)


def transform_object(t: Sl2Transform, x):
    """Spinors transform index by index; a bare polynomial is a scalar and is unchanged."""
    if isinstance(x, Spinor):
        return transform_spinor(t, x)
    if isinstance(x, Poly):
        return x
    raise TypeError(f"cannot transform {type(x).__name__}")


def induced_lorentz(t: Sl2Transform) -> list[list[GaussianRational]]:
    """``Lambda`` with ``spinor(Lambda v) = S . spinor(v)`` for all four-vectors ``v``."""
    cols = []
    for nu in range(4):
        e = [const(1 if mu == nu else 0) for mu in range(4)]
        cols.append([x.constant_value() for x in spinor_to_vector(transform_spinor(t, vector_to_spinor(e)))])
    return [[cols[nu][mu] for nu in range(4)] for mu in range(4)]


def apply_lorentz(lam, v: Sequence) -> tuple:
    return tuple(sum((lam[mu][nu] * v[nu] for nu in range(4)), GR(0)) for mu in range(4))


# -- structural checks ------------------------------------------------------------------


def verify_transform(key: str, t: Sl2Transform) -> list[CheckResult]:
    lam = induced_lorentz(t)
    g = [[GR(METRIC[i]) if i == j else GR(0) for j in range(4)] for i in range(4)]
    metric_res = [sum((lam[k][i] * g[k][k] * lam[k][j] for k in range(4)), GR(0)) - g[i][j]
                  for i in range(4) for j in range(4)]
    det_lam = determinant(_matrix(lam)).constant_value()
    z = Spinor(((UNDOTTED, DOWN), (DOTTED, DOWN)),
               {(a, b): field_symbol(f"z_{{{a}{b}'}}") for a in (1, 2) for b in (1, 2)})
    zm = PolyMatrix(TABLE, [[z[1, 1], z[1, 2]], [z[2, 1], z[2, 2]]])
    expected = t.S * zm * t.S_bar.transpose()
    zt = transform_spinor(t, z)
    vec_res = [zt[a, b] - expected[a - 1, b - 1] for a in (1, 2) for b in (1, 2)]
    eps = Spinor(((UNDOTTED, DOWN), (UNDOTTED, DOWN)), {(1, 1): const(0), (1, 2): const(1), (2, 1): const(-1),
                                                        (2, 2): const(0)})
    eps_t = transform_spinor(t, eps)
    psym = vector_to_spinor(P)
    moved = vector_to_spinor([sum((lam[mu][nu] * P[nu] for nu in range(4)), const(0)) for mu in range(4)])
    mom_res = [transform_spinor(t, psym)[k] - moved[k] for k in psym.comps]
    return [
        zero_check(f"covariance.transform.{key}.det", [t.det() - 1], "det S = 1", {"S": _rows_str(t.S)}),
        zero_check(f"covariance.lorentz.{key}", metric_res + [det_lam - 1], "Lambda^T g Lambda = g, det Lambda = 1",
                   {"Lambda": [[str(x) for x in r] for r in lam]}),
        zero_check(f"covariance.vector-spinor.{key}", vec_res, "zeta'_AB' = (S zeta S^dagger)_AB'"),
        zero_check(f"covariance.epsilon.{key}", [eps_t[k] - eps[k] for k in eps.comps], "eps_AB is invariant"),
        zero_check(f"covariance.momentum.{key}", mom_res, "S acting on p^AB' is Lambda acting on p^mu"),
    ]


def _rows_str(m: PolyMatrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in m.constant_rows()]


# -- systems and their index layout --------------------------------------------------------


@dataclass(frozen=True)
class CovariantLayout:
    """An equation system plus the spinor objects its unknowns belong to.

    Components of those objects that the system does not mention are set to
    zero before transforming.
    """

    label: str
    system: EquationSystem
    objects: tuple[tuple[tuple, Callable[[int, ...], Poly | None]], ...]
    expect_covariant: bool


def _vec_up(fn):
    return (((UNDOTTED, UP), (DOTTED, UP)), fn)


def _vec_down(fn):
    return (((UNDOTTED, DOWN), (DOTTED, DOWN)), fn)


def _sym(chir, fn):
    return (((chir, DOWN), (chir, DOWN)), fn)


def _scalar(x):
    return ((), lambda: x)


def layout(label: str) -> CovariantLayout:
    from . import split_spin0 as s0
    from . import split_spin1 as s1

    if label in ("spin0-dotted1", "spin0-dotted2", "spin0-combined"):
        if label == "spin0-combined":
            system = s0.combined_system()
        else:
            system = s0.build_constituent0(s0.DOTTED_1 if label.endswith("1") else s0.DOTTED_2).system
        objs = (_vec_up(s0.psi), _scalar(s0.PSI))
        return CovariantLayout(label, system, objs, label == "spin0-combined")
    if label.startswith("spin1-") and label != "spin1-spinor":
        c = s1.build_constituent1(label[len("spin1-"):])
        if label.startswith("spin1-eta"):
            objs = (_vec_down(s1.zetahat), _sym(UNDOTTED, s1.eta))
        else:
            objs = (_vec_down(s1.zetacheck), _sym(DOTTED, s1.chi))
        return CovariantLayout(label, c.system, objs, False)
    if label in ("hh-eta", "hh-chi"):
        ch = s1.UNDOTTED_ETA if label == "hh-eta" else s1.DOTTED_CHI
        objs = (_vec_down(s1.zeta), _sym(UNDOTTED, s1.eta) if label == "hh-eta" else _sym(DOTTED, s1.chi))
        return CovariantLayout(label, s1.build_hagen_hurley_half(ch).expansion, objs, True)
    if label == "hh-combined":
        a = s1.build_hagen_hurley_half(s1.UNDOTTED_ETA).expansion
        b = s1.build_hagen_hurley_half(s1.DOTTED_CHI).expansion
        system = EquationSystem.of(list(a) + list(b), s1.SPINOR_STATE)
        objs = (_vec_down(s1.zeta), _sym(UNDOTTED, s1.eta), _sym(DOTTED, s1.chi))
        return CovariantLayout(label, system, objs, True)
    if label == "spin1-spinor":
        objs = (_vec_down(s1.zeta), _sym(UNDOTTED, s1.eta), _sym(DOTTED, s1.chi))
        return CovariantLayout(label, s1.build_spin1_spinor_system(), objs, True)
    raise ValueError(f"unknown system {label!r}")


CONSTITUENTS = ("spin0-dotted1", "spin0-dotted2", "spin1-eta-1", "spin1-eta-2", "spin1-chi-1", "spin1-chi-2")
COMBINED = ("spin0-combined", "hh-combined")
COVARIANCE_SYSTEMS = CONSTITUENTS + COMBINED + ("hh-eta", "hh-chi", "spin1-spinor")


def _basis(system: EquationSystem, point: dict) -> list[list[GaussianRational]]:
    rows = system.coefficient_matrix().subs(point).reduce([INVERSE_MASS]).constant_rows()
    return nullspace(rows)


def _transform_values(t: Sl2Transform, lay: CovariantLayout, values: dict) -> dict:
    out = {}
    for slots, fn in lay.objects:
        if not slots:
            x = fn()
            out[x] = values.get(x, GR(0))
            continue
        comps = {}
        for idx in Spinor.build(slots, lambda *i: const(0)).comps:
            f = fn(*idx)
            comps[idx] = const(values.get(f, GR(0)))
        moved = transform_spinor(t, Spinor(slots, comps))
        for idx in comps:
            out[fn(*idx)] = moved[idx].constant_value()
    return out


@dataclass
class CovarianceOutcome:
    label: str
    transform: str
    nullity: int
    nullity_after: int
    residuals: list[Poly]
    violated: list[int]

    @property
    def covariant(self) -> bool:
        return not self.violated and self.nullity == self.nullity_after


def test_constituent_covariance(label: str, t: Sl2Transform, mom: OnShellMomentum | None = None) -> CovarianceOutcome:
    """Transform every basis solution at ``p`` and substitute it into the same system at ``Lambda p``."""
    mom = mom or make_onshell(4, ("custom", (5, 3, 0, 0)))
    lay = layout(label)
    lam = induced_lorentz(t)
    moved = OnShellMomentum(apply_lorentz(lam, mom.p), mom.m)
    fields = [Poly.symbol(TABLE, s) for s in lay.system.unknowns]
    basis = _basis(lay.system, mom.point)
    residuals = []
    violated: set[int] = set()
    for v in basis:
        new = _transform_values(t, lay, dict(zip(fields, v)))
        point = moved.point
        point.update({f: new[f] for f in fields})
        for i, r in enumerate(lay.system.residuals()):
            val = r.subs(point).reduce([INVERSE_MASS])
            residuals.append(val)
            if not val.is_zero():
                violated.add(i + 1)
    return CovarianceOutcome(label, t.name, len(basis), len(_basis(lay.system, moved.point)), residuals,
                             sorted(violated))


def verify_covariance(momenta: Sequence[OnShellMomentum] | None = None) -> list[CheckResult]:
    momenta = list(momenta or [make_onshell(4, ("custom", (5, 3, 0, 0))), make_onshell(2, ("custom", (3, 1, 2, 0)))])
    transforms = standard_transforms()
    out = []
    for key, t in transforms.items():
        out.extend(verify_transform(key, t))
    for label in COVARIANCE_SYSTEMS:
        lay = layout(label)
        for key, t in transforms.items():
            outcomes = [test_constituent_covariance(label, t, mom) for mom in momenta]
            detail = {"transform": t.name, "nullities": [o.nullity for o in outcomes],
                      "violated_lines": [o.violated for o in outcomes]}
            breaks = not lay.expect_covariant and key == "boost-x"
            if breaks:
                ok = any(o.violated for o in outcomes)
                detail["residuals"] = [str(r) for o in outcomes for r in o.residuals]
                out.append(bool_check(f"covariance.{label}.{key}.breaking", ok,
                                      "transformed solution violates the system at Lambda p", detail,
                                      residuals=["0"] if ok else ["no violated line"]))
            else:
                res = [r for o in outcomes for r in o.residuals]
                res += [o.nullity_after - o.nullity for o in outcomes]
                out.append(zero_check(f"covariance.{label}.{key}", res,
                                      "transformed solution solves the system at Lambda p", detail))
    return out
