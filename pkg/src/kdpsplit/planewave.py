"""Exact plane-wave solutions at rational on-shell momenta."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .checks import CheckResult, bool_check, zero_check
from .exact import GaussianRational, Poly, PolyMatrix, nullspace
from .representations import RepresentationSet, build_beta, build_gamma, build_hagen_hurley, build_rho, kdp_spin0_system
from .spinor_calculus import DOTTED, UNDOTTED, UP, Spinor, spinor_to_vector, vector_to_spinor
from .symbols import INVERSE_MASS, METRIC, const, numeric_momentum


class OffShellError(ValueError):
    pass


@dataclass(frozen=True)
class OnShellMomentum:
    p: tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]
    m: GaussianRational

    def __post_init__(self):
        if len(self.p) != 4:
            raise ValueError("momentum needs four components")
        if not all(x.is_real() for x in self.p) or not self.m.is_real():
            raise ValueError("momentum and mass must be real")
        if self.m.re <= 0:
            raise ValueError("mass must be positive")
        gap = shell_gap(self.p, self.m)
        if gap:
            raise OffShellError(f"off shell: p.p - m^2 = {gap}")

    @property
    def point(self) -> dict:
        return numeric_momentum(self.p, self.m)

    def __str__(self):
        return f"p=({', '.join(map(str, self.p))}), m={self.m}"


def shell_gap(p: Sequence, m) -> GaussianRational:
    p = [GaussianRational.coerce(x) for x in p]
    m = GaussianRational.coerce(m)
    return sum((METRIC[mu] * p[mu] * p[mu] for mu in range(4)), GaussianRational(0)) - m * m


def _boost(a: int, b: int) -> tuple[GaussianRational, GaussianRational]:
    if not (isinstance(a, int) and isinstance(b, int) and a > b > 0):
        raise ValueError("boost generators need integers a > b > 0")
    d = GaussianRational(a * a - b * b)
    return GaussianRational(a * a + b * b) / d, GaussianRational(2 * a * b) / d


def make_onshell(m, generator: Sequence) -> OnShellMomentum:
    """``("rest",)``, ``("boost-z", a, b)``, ``("boost-x", a, b)`` or ``("custom", p)``."""
    m = GaussianRational.coerce(m)
    kind = generator[0]
    zero = GaussianRational(0)
    if kind == "rest":
        p = (m, zero, zero, zero)
    elif kind in ("boost-z", "boost-x"):
        c, s = _boost(*generator[1:])
        p = (m * c, zero, zero, m * s) if kind == "boost-z" else (m * c, m * s, zero, zero)
    elif kind == "custom":
        p = tuple(GaussianRational.coerce(x) for x in generator[1])
    else:
        raise ValueError(f"unknown momentum generator {kind!r}")
    return OnShellMomentum(tuple(p), m)


DEFAULT_MOMENTA = (
    ("rest", 2, ("rest",)),
    ("boost-z", 4, ("boost-z", 2, 1)),
    ("boost-x", 3, ("boost-x", 3, 1)),
    ("custom", 4, ("custom", (5, 3, 0, 0))),
    ("oblique", 2, ("custom", (3, 1, 2, 0))),
)


def default_momenta() -> list[OnShellMomentum]:
    return [make_onshell(m, gen) for _, m, gen in DEFAULT_MOMENTA]


# -- solving -------------------------------------------------------------------------

_RHO_LABELS = {
    "rho-s0": "s0", "rho-s0-tilde": "s0-tilde",
    "rho-s1-eta-1": "s1-eta", "rho-s1-eta-2": "s1-eta-tilde",
    "rho-s1-chi-1": "s1-chi", "rho-s1-chi-2": "s1-chi-tilde",
}
SOLVE_LABELS = ("kdp-spin0", "kdp-spin1", "hh-eta", "hh-chi", *_RHO_LABELS, "dirac", "dirac-pinned")
EXPECTED_NULLITY = {"kdp-spin0": 1, "kdp-spin1": 3, "hh-eta": 3, "hh-chi": 3, "dirac": 2, "dirac-pinned": 1,
                    **{k: 1 for k in _RHO_LABELS}}


@dataclass(frozen=True)
class PlanewaveSolution:
    label: str
    momentum: OnShellMomentum
    basis: tuple[tuple[GaussianRational, ...], ...]
    state: tuple[str, ...]

    @property
    def nullity(self) -> int:
        return len(self.basis)

    def dump(self) -> str:
        lines = [f"system: {self.label}",
                 f"momentum: {', '.join(map(str, self.momentum.p))}",
                 f"mass: {self.momentum.m}",
                 f"state: {', '.join(self.state)}",
                 f"nullity: {self.nullity}"]
        for i, v in enumerate(self.basis, 1):
            lines.append(f"basis[{i}]: " + ", ".join(map(str, v)))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"system": self.label, "momentum": [str(x) for x in self.momentum.p], "mass": str(self.momentum.m),
                "state": list(self.state), "basis": [[str(x) for x in v] for v in self.basis]}


def representation_for(label: str) -> RepresentationSet:
    if label == "kdp-spin0":
        return build_beta(0)
    if label == "kdp-spin1":
        return build_beta(1)
    if label == "hh-eta":
        return build_hagen_hurley("undotted-eta")
    if label == "hh-chi":
        return build_hagen_hurley("dotted-chi")
    if label in _RHO_LABELS:
        return build_rho(_RHO_LABELS[label])
    if label == "dirac":
        return build_gamma()
    raise ValueError(f"unknown system {label!r}; expected one of {', '.join(SOLVE_LABELS)}")


def _constant(m: PolyMatrix, point: dict) -> list[list[GaussianRational]]:
    return m.subs(point).reduce([INVERSE_MASS]).constant_rows()


def _pinned_dirac():
    from .dirac_subsolutions import build_dirac_embedding

    d = build_dirac_embedding("spin0-dotted1")
    unknowns = [next(iter(s.symbols())) for s in d.state[:3]]
    return d.system().coefficient_matrix(unknowns), tuple(u.name for u in unknowns)


def wave_matrix(label: str, mom: OnShellMomentum) -> tuple[list[list[GaussianRational]], tuple[str, ...]]:
    """Constant matrix whose nullspace is the solution space, and the state names."""
    if label == "dirac-pinned":
        mat, names = _pinned_dirac()
        return _constant(mat, mom.point), names
    rep = representation_for(label)
    if label == "dirac":
        names = tuple(f"Psi_{i}" for i in range(1, 5))
    else:
        names = tuple(rep.metadata.get("state", ()))
    return _constant(rep.wave_operator(), mom.point), names


def solve(label: str, mom: OnShellMomentum) -> PlanewaveSolution:
    rows, names = wave_matrix(label, mom)
    basis = tuple(tuple(v) for v in nullspace(rows))
    return PlanewaveSolution(label, mom, basis, names)


def solution_residuals(sol: PlanewaveSolution) -> list[GaussianRational]:
    rows, _ = wave_matrix(sol.label, sol.momentum)
    out = []
    for v in sol.basis:
        out.extend(sum((a * x for a, x in zip(row, v)), GaussianRational(0)) for row in rows)
    return out


# -- spin-0 embedding ------------------------------------------------------------------


def embed_spin0(phi: Sequence, mom: OnShellMomentum) -> list[GaussianRational]:
    """Complete a dotted-1 constituent solution to ``(psi^mu, psi)``.

    ``phi = (psi^{11'}, psi^{21'}, psi)``; the dotted-2 components come from
    ``psi^{A2'} = p^{A2'} psi / m``.
    """
    if not mom.m:
        raise ZeroDivisionError("embedding divides by the mass")
    phi = [GaussianRational.coerce(x) for x in phi]
    p_spinor = vector_to_spinor([const(x) for x in mom.p])
    scale = phi[2] / mom.m
    comps = {
        (1, 1): const(phi[0]), (2, 1): const(phi[1]),
        (1, 2): p_spinor[1, 2] * scale, (2, 2): p_spinor[2, 2] * scale,
    }
    vec = spinor_to_vector(Spinor(((UNDOTTED, UP), (DOTTED, UP)), comps))
    return [v.constant_value() for v in vec] + [phi[2]]


def kdp_spin0_residuals(values: Sequence, mom: OnShellMomentum) -> list[Poly]:
    system = kdp_spin0_system()
    point = mom.point
    point.update({s: GaussianRational.coerce(v) for s, v in zip(system.unknowns, values)})
    return [r.subs(point) for r in system.residuals()]


def verify_embed_spin0(momenta: Sequence[OnShellMomentum] | None = None) -> list[CheckResult]:
    out = []
    residuals = []
    for mom in momenta or default_momenta():
        for v in solve("rho-s0", mom).basis:
            residuals.extend(kdp_spin0_residuals(embed_spin0(v, mom), mom))
    out.append(zero_check("planewave.embed.spin0", residuals, "completed constituent solutions solve the KDP system"))
    rest = make_onshell(2, ("rest",))
    emb = embed_spin0(solve("rho-s0", rest).basis[0], rest)
    psi = emb[4]
    out.append(zero_check("planewave.embed.spin0.rest-frame", [emb[0] - psi, emb[1], emb[2], emb[3]],
                          "rest frame gives (psi, 0, 0, 0, psi)"))
    out.append(zero_check("planewave.embed.spin0.zero", embed_spin0([0, 0, 0], rest), "zero maps to zero"))
    return out


# -- spin-1 reconstruction -------------------------------------------------------------


def verify_reconstruct_spin1(momenta: Sequence[OnShellMomentum] | None = None) -> list[CheckResult]:
    from .representations import kdp_spin1_system
    from .split_spin1 import DOTTED_CHI, UNDOTTED_ETA, reconstruct_full_solution, spinor_residuals_at, tensor_solution

    out = []
    for chirality, labels in ((UNDOTTED_ETA, ("rho-s1-eta-1", "rho-s1-eta-2")),
                              (DOTTED_CHI, ("rho-s1-chi-1", "rho-s1-chi-2"))):
        spinor_res, tensor_res = [], []
        for mom in momenta or default_momenta():
            parts = {}
            for label, name in zip(labels, ("1", "2")):
                key = ("eta-" if chirality == UNDOTTED_ETA else "chi-") + name
                parts[key] = solve(label, mom).basis[0]
            values = reconstruct_full_solution(parts, 1, mom.p, mom.m, chirality)
            spinor_res.extend(spinor_residuals_at(values, mom.p, mom.m))
            tensor = tensor_solution(values)
            system = kdp_spin1_system()
            point = mom.point
            point.update(dict(zip(system.unknowns, tensor)))
            tensor_res.extend(r.subs(point) for r in system.residuals())
        tag = "eta" if chirality == UNDOTTED_ETA else "chi"
        out.append(zero_check(f"planewave.reconstruct.{tag}.spinor", spinor_res,
                              "two constituent solutions plus the scalar solve the spinor system"))
        out.append(zero_check(f"planewave.reconstruct.{tag}.tensor", tensor_res,
                              "the reconstructed solution solves the tensor KDP system"))
    return out


# -- degree-of-freedom counting ------------------------------------------------------


def nullity_table(momenta: Sequence[OnShellMomentum] | None = None) -> dict[str, list[int]]:
    momenta = momenta or default_momenta()
    return {label: [solve(label, mom).nullity for mom in momenta] for label in SOLVE_LABELS}


def count_degrees(momenta: Sequence[OnShellMomentum] | None = None) -> list[CheckResult]:
    momenta = list(momenta or default_momenta())
    if len(momenta) < 3:
        raise ValueError("need at least three momenta")
    table = nullity_table(momenta)
    out = []
    for label, counts in table.items():
        want = EXPECTED_NULLITY[label]
        residual = [str(c - want) for c in counts]
        out.append(zero_check(f"planewave.nullity.{label}", residual,
                              f"on-shell solution space of {label} has dimension {want}",
                              {"nullities": counts, "components": len(wave_matrix(label, momenta[0])[1]),
                               "momenta": [str(m) for m in momenta]}))
    for tag in ("eta", "chi"):
        split = [a + b + 1 for a, b in zip(table[f"rho-s1-{tag}-1"], table[f"rho-s1-{tag}-2"])]
        out.append(zero_check(f"planewave.split-accounting.{tag}",
                              [s - h for s, h in zip(split, table[f"hh-{tag}"])] +
                              [h - k for h, k in zip(table[f"hh-{tag}"], table["kdp-spin1"])],
                              "two constituents plus the scalar: 1 + 1 + 1 = 3", {"split": split}))
    residuals = []
    for label in SOLVE_LABELS:
        for mom in momenta:
            residuals.extend(solution_residuals(solve(label, mom)))
    out.append(zero_check("planewave.basis-residuals", residuals, "every basis vector solves its system"))
    out.append(bool_check("planewave.rest-frame-sampled", any(not any(m.p[1:]) for m in momenta),
                          "the momentum sample includes a rest frame"))
    return out


def verify_transversality(momenta: Sequence[OnShellMomentum] | None = None) -> CheckResult:
    """Spin-1 solutions satisfy ``p_mu psi^mu = 0``."""
    residuals = []
    for mom in momenta or default_momenta():
        sol = solve("kdp-spin1", mom)
        idx = [sol.state.index(f"psi^{{{mu}}}") for mu in range(4)]
        for v in sol.basis:
            residuals.append(sum((METRIC[mu] * mom.p[mu] * v[i] for mu, i in enumerate(idx)), GaussianRational(0)))
    return zero_check("planewave.spin1.transversality", residuals, "p_mu psi^mu = 0 for every spin-1 solution")


def verify_planewave() -> list[CheckResult]:
    return count_degrees() + verify_embed_spin0() + verify_reconstruct_spin1() + [verify_transversality()]
