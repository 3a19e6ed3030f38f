"""Matrix families: KDP beta (5x5, 10x10), the 3x3 rho families,
Hagen-Hurley 7x7, and Dirac gamma matrices in the spinor representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .checks import CheckResult, bool_check, zero_check
from .exact import (
    I, EquationSystem, Equation, GaussianRational, PolyMatrix, determinant, equivalence_factor,
    nullspace,
)
from .exact.poly import Kind
from .spinor_calculus import PAIRS
from .symbols import METRIC, M, M_SYMBOL, P, P_SQUARED, P_SYMBOLS, TABLE, const, field as fld

RHO_FAMILIES = ("s0", "s0-tilde", "s1-eta", "s1-eta-tilde", "s1-chi", "s1-chi-tilde")


@dataclass(frozen=True)
class RepresentationSet:
    name: str
    mu: tuple[PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix]
    extras: dict = field(default_factory=dict)
    provenance: str = ""
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        n = self.mu[0].rows
        for mat in list(self.mu) + list(self.extras.values()):
            if mat.shape != (n, n):
                raise ValueError(f"{self.name}: all matrices must be {n}x{n}")
            if not mat.is_constant():
                raise ValueError(f"{self.name}: matrix entries must be constants")

    @property
    def dim(self) -> int:
        return self.mu[0].rows

    def operator(self, p: Sequence = P) -> PolyMatrix:
        """``R_mu p^mu = sum_mu g_mumu R^mu p^mu``."""
        out = PolyMatrix.zeros(TABLE, self.dim)
        for mu in range(4):
            out = out + self.mu[mu] * (METRIC[mu] * p[mu])
        return out

    def wave_operator(self, p: Sequence = P, m=M) -> PolyMatrix:
        return self.operator(p) - PolyMatrix.identity(TABLE, self.dim) * m

    def to_dict(self) -> dict:
        def grid(mat):
            return [[str(e) for e in row] for row in mat.entries]
        out = {"name": self.name, "dimension": self.dim,
               "entries": {f"mu{k}": grid(m) for k, m in enumerate(self.mu)}}
        if self.extras:
            out["extras"] = {k: grid(v) for k, v in sorted(self.extras.items())}
        return out

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"name: {d['name']}", f"dimension: {d['dimension']}"]
        for key, rows in list(d["entries"].items()) + sorted(d.get("extras", {}).items()):
            width = max(len(e) for row in rows for e in row)
            lines.append(f"{key}:")
            lines.extend("  [" + "  ".join(e.rjust(width) for e in row) + "]" for row in rows)
        return "\n".join(lines)

    def perturbed(self, mu: int = 0, row: int = 0, col: int = 0, amount=1) -> "RepresentationSet":
        """Copy with one entry shifted; a negative control for the verifiers."""
        mats = list(self.mu)
        rows = [list(r) for r in mats[mu].entries]
        rows[row][col] = rows[row][col] + amount
        mats[mu] = PolyMatrix(TABLE, rows)
        return RepresentationSet(self.name + "+perturbed", tuple(mats), dict(self.extras),
                                 self.provenance, dict(self.metadata))


def _mat(rows) -> PolyMatrix:
    return PolyMatrix(TABLE, [[GaussianRational.coerce(x) if not isinstance(x, GaussianRational) else x
                               for x in r] for r in rows])


# -- deriving matrices from component systems --------------------------------


def matrices_from_system(system: EquationSystem) -> tuple[tuple[PolyMatrix, ...], list[GaussianRational]]:
    """Read ``R^mu`` off a system written as ``L(p) x = m x`` row by row.

    Each residual must be ``sum_j (sum_mu c_ij^mu p^mu) x_j - k_i m x_i``;
    row ``i`` is divided by ``k_i`` so that the eigenvalue is uniformly ``m``.
    Returns the four matrices and the row scale factors ``k_i``.
    """
    coeff = system.coefficient_matrix()
    n = len(system.unknowns)
    if coeff.rows != n:
        raise ValueError("need one equation per unknown")
    mats = [[[GaussianRational(0)] * n for _ in range(n)] for _ in range(4)]
    scales = []
    for i in range(n):
        k = None
        for j in range(n):
            entry = coeff[i, j]
            m_part = entry.coefficient(M_SYMBOL)
            if not m_part.is_constant():
                raise ValueError(f"row {i}: mass coefficient is not constant")
            if j == i:
                k = -m_part.constant_value()
            elif m_part:
                raise ValueError(f"row {i}: off-diagonal mass term")
            rest = entry - m_part * M
            for mu in range(4):
                c = rest.coefficient(P_SYMBOLS[mu])
                if not c.is_constant():
                    raise ValueError(f"row {i}: entry is not linear in the momenta")
                mats[mu][i][j] = c.constant_value()
            if rest - sum((mats[mu][i][j] * P[mu] for mu in range(4)), const(0)):
                raise ValueError(f"row {i}: unexpected terms in {entry}")
        if not k:
            raise ValueError(f"row {i} has no m x_{i} term")
        scales.append(k)
        for mu in range(4):
            mats[mu][i] = [METRIC[mu] * x / k for x in mats[mu][i]]
    return tuple(_mat(m) for m in mats), scales


def matrix_form_system(rep: RepresentationSet, state: Sequence, p: Sequence = P, m=M) -> EquationSystem:
    """Expand ``R_mu p^mu Phi = m Phi`` into component equations."""
    lhs = rep.operator(p).apply(state)
    state = [s if not isinstance(s, (int,)) else const(s) for s in state]
    eqs = [Equation(l, m * s, f"row {i + 1}") for i, (l, s) in enumerate(zip(lhs, state))]
    unknowns = [x for s in state for x in s.symbols() if x.kind is Kind.FIELD]
    return EquationSystem.of(eqs, unknowns)


def compare_systems(a: EquationSystem, b: EquationSystem, ids: str, anchor: str = "") -> CheckResult:
    """Row-by-row equivalence (residuals equal up to a nonzero constant)."""
    if len(a) != len(b):
        return bool_check(ids, False, anchor, residuals=[f"{len(a)} vs {len(b)} equations"])
    residuals = []
    factors = []
    for ea, eb in zip(a, b):
        k = equivalence_factor(ea, eb)
        if k is None:
            residuals.append(ea.residual - eb.residual)
            factors.append(None)
        else:
            residuals.append(ea.residual - eb.residual * k)
            factors.append(str(k))
    return zero_check(ids, residuals, anchor, {"row_factors": factors})


# -- KDP tensor systems ------------------------------------------------------

SPIN0_STATE_NAMES = ("psi^{0}", "psi^{1}", "psi^{2}", "psi^{3}", "psi")
SPIN1_STATE_NAMES = tuple(f"psi^{{{a}{b}}}" for a, b in PAIRS) + ("psi^{0}", "psi^{1}", "psi^{2}", "psi^{3}")


def kdp_spin0_system() -> EquationSystem:
    """``p^mu psi = m psi^mu``, ``p_nu psi^nu = m psi`` in the state order ``(psi^mu, psi)``."""
    vec = [fld(n) for n in SPIN0_STATE_NAMES[:4]]
    psi = fld("psi")
    eqs = [Equation(P[mu] * psi, M * vec[mu], f"p^{mu} psi = m psi^{mu}") for mu in range(4)]
    eqs.append(Equation(sum((METRIC[nu] * P[nu] * vec[nu] for nu in range(4)), const(0)), M * psi,
                        "p_nu psi^nu = m psi"))
    return EquationSystem.of(eqs, [TABLE[n] for n in SPIN0_STATE_NAMES])


def spin1_tensor_fields():
    tens = {pair: fld(f"psi^{{{pair[0]}{pair[1]}}}") for pair in PAIRS}
    vec = [fld(f"psi^{{{mu}}}") for mu in range(4)]

    def t(mu, nu):
        if mu == nu:
            return const(0)
        if (mu, nu) in tens:
            return tens[(mu, nu)]
        return -tens[(nu, mu)]

    return t, vec


def kdp_spin1_system() -> EquationSystem:
    """``p^mu psi^nu - p^nu psi^mu = m psi^{mu nu}``, ``p_mu psi^{mu nu} = m psi^nu``."""
    t, vec = spin1_tensor_fields()
    eqs = [Equation(P[a] * vec[b] - P[b] * vec[a], M * t(a, b), f"curl {a}{b}") for a, b in PAIRS]
    for nu in range(4):
        div = sum((METRIC[mu] * P[mu] * t(mu, nu) for mu in range(4)), const(0))
        eqs.append(Equation(div, M * vec[nu], f"divergence {nu}"))
    return EquationSystem.of(eqs, [TABLE[n] for n in SPIN1_STATE_NAMES])


# -- builders ----------------------------------------------------------------


def build_beta(spin: int) -> RepresentationSet:
    if spin == 0:
        system = kdp_spin0_system()
    elif spin == 1:
        system = kdp_spin1_system()
    else:
        raise ValueError("spin must be 0 or 1")
    mats, scales = matrices_from_system(system)
    return RepresentationSet(
        f"beta-spin{spin}", mats,
        provenance="derived from the first-order component system",
        metadata={"state": [s.name for s in system.unknowns], "row_scales": [str(k) for k in scales],
                  "reality": "psi^lambda real, psi^{mu nu} imaginary (not enforced)" if spin else ""},
    )


_RHO_LITERALS = {
    "s0": (
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
        [[0, 0, 0], [0, 0, -I], [0, -I, 0]],
        [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
    ),
    "s0-tilde": (
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, I], [0, 0, 0], [I, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    ),
    "s1-eta": (
        [[0, 0, 0], [0, 0, -1], [0, -1, 0]],
        [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, I], [0, 0, 0], [I, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    ),
    "s1-eta-tilde": (
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
        [[0, 0, 0], [0, 0, I], [0, I, 0]],
        [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    ),
    "s1-chi": (
        [[0, 0, 0], [0, 0, -1], [0, -1, 0]],
        [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, -I], [0, 0, 0], [-I, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    ),
    "s1-chi-tilde": (
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
        [[0, 0, 0], [0, 0, -I], [0, -I, 0]],
        [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    ),
}

RHO_STATES = {
    "s0": ("psi^{11'}", "psi^{21'}", "psi"),
    "s0-tilde": ("psi^{12'}", "psi^{22'}", "psi"),
    "s1-eta": ("zetahat_{11'}", "zetahat_{12'}", "eta_{11}"),
    "s1-eta-tilde": ("zetahat_{21'}", "zetahat_{22'}", "eta_{22}"),
    "s1-chi": ("zetacheck_{11'}", "zetacheck_{21'}", "chi_{1'1'}"),
    "s1-chi-tilde": ("zetacheck_{12'}", "zetacheck_{22'}", "chi_{2'2'}"),
}


def build_rho(family: str) -> RepresentationSet:
    if family not in _RHO_LITERALS:
        raise ValueError(f"unknown rho family {family!r}; expected one of {RHO_FAMILIES}")
    mats = tuple(_mat(m) for m in _RHO_LITERALS[family])
    return RepresentationSet(f"rho-{family}", mats, provenance="literal 3x3 matrices",
                             metadata={"state": list(RHO_STATES[family])})


SIGMA = (
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[0, -I], [I, 0]],
    [[1, 0], [0, -1]],
)


def _block(a, b, c, d):
    return [ra + rb for ra, rb in zip(a, b)] + [rc + rd for rc, rd in zip(c, d)]


def build_gamma() -> RepresentationSet:
    zero = [[0, 0], [0, 0]]
    neg = lambda m: [[-x for x in r] for r in m]  # noqa: E731
    g0 = _mat(_block(zero, SIGMA[0], SIGMA[0], zero))
    gj = [_mat(_block(zero, neg(SIGMA[j]), SIGMA[j], zero)) for j in (1, 2, 3)]
    g5 = _mat(_block(SIGMA[0], zero, zero, neg(SIGMA[0])))
    rep = RepresentationSet("gamma", (g0, *gj), extras={"gamma5": g5},
                            provenance="spinor (chiral) representation")
    ident = PolyMatrix.identity(TABLE, 4)
    for mu in range(4):
        for nu in range(4):
            anti = rep.mu[mu] * rep.mu[nu] + rep.mu[nu] * rep.mu[mu]
            want = ident * (2 * METRIC[mu]) if mu == nu else PolyMatrix.zeros(TABLE, 4)
            if anti != want:
                raise RuntimeError(f"Clifford relation fails for ({mu},{nu})")
        if g5 * rep.mu[mu] + rep.mu[mu] * g5 != PolyMatrix.zeros(TABLE, 4):
            raise RuntimeError(f"gamma5 does not anticommute with gamma^{mu}")
    return rep


def build_hagen_hurley(chirality: str) -> RepresentationSet:
    from .split_spin1 import build_hagen_hurley_half

    half = build_hagen_hurley_half(chirality)
    system = half.matrix_rows()
    mats, scales = matrices_from_system(system)
    return RepresentationSet(
        f"hh-{'eta' if chirality == 'undotted-eta' else 'chi'}", mats,
        provenance="derived from the spinor-basis 7-component system",
        metadata={"state": [s.name for s in system.unknowns], "row_scales": [str(k) for k in scales]},
    )


REPRESENTATION_NAMES = ("beta-spin0", "beta-spin1", "gamma", "hh-eta", "hh-chi") + tuple(
    f"rho-{f}" for f in RHO_FAMILIES)


def build(name: str) -> RepresentationSet:
    if name == "beta-spin0":
        return build_beta(0)
    if name == "beta-spin1":
        return build_beta(1)
    if name == "gamma":
        return build_gamma()
    if name == "hh-eta":
        return build_hagen_hurley("undotted-eta")
    if name == "hh-chi":
        return build_hagen_hurley("dotted-chi")
    if name.startswith("rho-"):
        return build_rho(name[4:])
    raise KeyError(name)


# -- algebra verification ----------------------------------------------------

TRIPLES = tuple(itertools.product(range(4), repeat=3))


def _triple_products(rep: RepresentationSet) -> dict:
    pairs = {(a, b): rep.mu[a] * rep.mu[b] for a in range(4) for b in range(4)}
    return {(a, b, c): pairs[(a, b)] * rep.mu[c] for a, b, c in TRIPLES}


def _g(a: int, b: int) -> int:
    return METRIC[a] if a == b else 0


def _summarise(ids: str, residual_mats: dict, anchor: str) -> CheckResult:
    bad = {t: r for t, r in residual_mats.items() if not r.is_zero()}
    residuals = ["0"]
    if bad:
        residuals = []
        for t, r in sorted(bad.items()):
            entry = next(e for row in r.entries for e in row if e)
            residuals.append(f"{t}: {entry}")
    detail = {"triples": len(residual_mats),
              "nonzero_entries": {",".join(map(str, t)): r.nnz() for t, r in sorted(bad.items())}}
    return zero_check(ids, residuals, anchor, detail)


def kdp_residuals(rep: RepresentationSet) -> dict:
    prods = _triple_products(rep)
    out = {}
    for l, m, n in TRIPLES:
        r = prods[(l, m, n)] + prods[(n, m, l)]
        if _g(l, m):
            r = r - rep.mu[n] * _g(l, m)
        if _g(n, m):
            r = r - rep.mu[l] * _g(n, m)
        out[(l, m, n)] = r
    return out


def verify_kdp_algebra(rep: RepresentationSet, ids: str | None = None) -> CheckResult:
    return _summarise(ids or f"algebra.kdp.{rep.name}", kdp_residuals(rep),
                      "b^l b^m b^n + b^n b^m b^l = g^lm b^n + g^nm b^l")


def tzou_residuals(rep: RepresentationSet) -> dict:
    prods = _triple_products(rep)
    out = {}
    for t in TRIPLES:
        r = PolyMatrix.zeros(TABLE, rep.dim)
        for a, b, c in itertools.permutations(t):
            r = r + prods[(a, b, c)]
            if _g(a, b):
                r = r - rep.mu[c] * _g(a, b)
        out[t] = r
    return out


def verify_tzou(rep: RepresentationSet, ids: str | None = None) -> CheckResult:
    return _summarise(ids or f"algebra.tzou.{rep.name}", tzou_residuals(rep),
                      "symmetrised r^(l r^m r^n) = g^(lm r^n)")


def intertwiner_basis(a: RepresentationSet, b: RepresentationSet) -> list[PolyMatrix]:
    """Basis of ``{S : S a^mu = b^mu S for all mu}``."""
    n = a.dim
    if b.dim != n:
        raise ValueError("representations of different dimension")
    rows = []
    for mu in range(4):
        am = a.mu[mu].constant_rows()
        bm = b.mu[mu].constant_rows()
        for i in range(n):
            for j in range(n):
                # (S a)_ij - (b S)_ij = sum_k S_ik a_kj - b_ik S_kj
                row = [GaussianRational(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + am[k][j]
                    row[k * n + j] = row[k * n + j] - bm[i][k]
                rows.append(row)
    basis = nullspace(rows)
    return [PolyMatrix(TABLE, [[v[i * n + j] for j in range(n)] for i in range(n)]) for v in basis]


def verify_no_similarity(a: RepresentationSet, b: RepresentationSet, ids: str | None = None,
                         expect_similar: bool = False) -> CheckResult:
    """Decide whether an invertible ``S`` with ``b^mu = S a^mu S^-1`` exists.

    The intertwiner space is solved exactly; the determinant of the general
    element ``sum_k c_k S_k`` is a polynomial in the ``c_k`` that vanishes
    identically exactly when no intertwiner is invertible.
    """
    basis = intertwiner_basis(a, b)
    if basis:
        coeffs = [_coefficient_symbol(k) for k in range(len(basis))]
        general = PolyMatrix.zeros(TABLE, a.dim)
        for c, s in zip(coeffs, basis):
            general = general + s * c
        det = determinant(general)
    else:
        det = const(0)
    similar = not det.is_zero()
    ok = similar == expect_similar
    ids = ids or f"algebra.similarity.{a.name}.{b.name}"
    anchor = "S a^mu = b^mu S has an invertible solution" if expect_similar else \
        "no invertible S with b^mu = S a^mu S^-1"
    return bool_check(ids, ok, anchor, {"intertwiner_dim": len(basis), "det": str(det)},
                      residuals=["0"] if ok else [str(det)])


def _coefficient_symbol(k: int):
    from .exact import Poly
    return Poly.symbol(TABLE, TABLE.add(f"c{k + 1}", Kind.PARAMETER))


def mass_content(rep: RepresentationSet):
    """``det(R_mu p^mu - m)`` as a polynomial in the momenta and mass."""
    return determinant(rep.wave_operator())


def verify_rho_conjugation() -> CheckResult:
    residuals = []
    for src, dst in (("s1-eta", "s1-chi"), ("s1-eta-tilde", "s1-chi-tilde")):
        a, b = build_rho(src), build_rho(dst)
        for mu in range(4):
            diff = a.mu[mu].conj() - b.mu[mu]
            residuals.extend(e for row in diff.entries for e in row)
    return zero_check("spin1.rho.conjugation", residuals, "rho(chi families) = conj(rho(eta families))")


def verify_gamma() -> list[CheckResult]:
    rep = build_gamma()
    g5 = rep.extras["gamma5"]
    ident = PolyMatrix.identity(TABLE, 4)
    clifford = []
    anti5 = []
    for mu in range(4):
        for nu in range(4):
            r = rep.mu[mu] * rep.mu[nu] + rep.mu[nu] * rep.mu[mu] - ident * (2 * _g(mu, nu))
            clifford.extend(e for row in r.entries for e in row)
        r = g5 * rep.mu[mu] + rep.mu[mu] * g5
        anti5.extend(e for row in r.entries for e in row)
    det = mass_content(rep)
    return [
        zero_check("algebra.clifford.gamma", clifford, "g^m g^n + g^n g^m = 2 g^mn"),
        zero_check("algebra.clifford.gamma5", anti5, "g5 g^m + g^m g5 = 0"),
        zero_check("algebra.mass.gamma", [det - (P_SQUARED - M * M) ** 2], "det(g_mu p^mu - m) = (p.p - m^2)^2"),
    ]
