"""Spin-1: spinor form, the two Hagen-Hurley halves, the hat/check changes
of variables and the three-component constituent systems.

Field names
    zeta_{AB'}           vector spinor with both indices down
    eta_{11}, eta, eta_{22}          symmetric undotted spinor (eta = eta_{12})
    chi_{1'1'}, chi, chi_{2'2'}      symmetric dotted spinor (chi = chi_{1'2'})
    zetahat_{AB'}, zetacheck_{AB'}   shifted vector spinors
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .checks import CheckResult, bool_check, zero_check
from .exact import (
    Equation, EquationSystem, GaussianRational, Poly, PolyMatrix, determinant, nullspace, proportionality,
)
from .representations import (
    RepresentationSet, build_beta, build_rho, compare_systems, kdp_spin1_system, matrices_from_system,
    matrix_form_system, verify_rho_conjugation,
)
from .spinor_calculus import (
    DOTTED, DOWN, UNDOTTED, UP, Spinor, SymSpinor, pm, spinor_to_vector, tensor_from_symspinor, vector_to_spinor,
)
from .symbols import (
    INVERSE_MASS, METRIC, M, M_INV, P, P_SQUARED, P_SYMBOLS, TABLE, const, field, mass_shell, minkowski,
    numeric_momentum, parameter, sym,
)

UNDOTTED_ETA = "undotted-eta"
DOTTED_CHI = "dotted-chi"
CHIRALITIES = (UNDOTTED_ETA, DOTTED_CHI)
HALF = Fraction(1, 2)

IDX = ((1, 1), (1, 2), (2, 1), (2, 2))


def zeta(a: int, b: int) -> Poly:
    return field(f"zeta_{{{a}{b}'}}")


def zetahat(a: int, b: int) -> Poly:
    return field(f"zetahat_{{{a}{b}'}}")


def zetacheck(a: int, b: int) -> Poly:
    return field(f"zetacheck_{{{a}{b}'}}")


ETA = (field("eta_{11}"), field("eta"), field("eta_{22}"))
CHI = (field("chi_{1'1'}"), field("chi"), field("chi_{2'2'}"))


def eta(a: int, c: int) -> Poly:
    return ETA[a + c - 2]


def chi(b: int, d: int) -> Poly:
    return CHI[b + d - 2]


ZETA_SYMBOLS = tuple(sym(zeta(a, b)) for a, b in IDX)
ETA_SYMBOLS = tuple(sym(x) for x in ETA)
CHI_SYMBOLS = tuple(sym(x) for x in CHI)
SPINOR_STATE = ETA_SYMBOLS + CHI_SYMBOLS + ZETA_SYMBOLS


def zeta_spinor() -> Spinor:
    return Spinor(((UNDOTTED, DOWN), (DOTTED, DOWN)), {ab: zeta(*ab) for ab in IDX})


# -- the spinor system --------------------------------------------------------


def build_spin1_spinor_system() -> EquationSystem:
    """Three groups: ``2 m eta_AC``, ``2 m chi_B'D'`` and ``-2 m zeta_AB'``.

    Rows are ordered like :data:`SPINOR_STATE` so the system reads ``L x = m x``
    after dividing each row by its mass coefficient.
    """
    eqs = []
    for a, c in ((1, 1), (1, 2), (2, 2)):
        lhs = sum((pm(f"_{a}^{b}") * zeta(c, b) + pm(f"_{c}^{b}") * zeta(a, b) for b in (1, 2)), const(0))
        eqs.append(Equation(lhs, 2 * M * eta(a, c), f"group 1 ({a},{c})"))
    for b, d in ((1, 1), (1, 2), (2, 2)):
        lhs = sum((pm(f"^{a}_{b}") * zeta(a, d) + pm(f"^{a}_{d}") * zeta(a, b) for a in (1, 2)), const(0))
        eqs.append(Equation(lhs, 2 * M * chi(b, d), f"group 2 ({b}',{d}')"))
    for a, b in IDX:
        lhs = sum((pm(f"_{a}^{c}") * chi(b, c) + pm(f"^{c}_{b}") * eta(a, c) for c in (1, 2)), const(0))
        eqs.append(Equation(lhs, -2 * M * zeta(a, b), f"group 3 ({a},{b}')"))
    return EquationSystem.of(eqs, SPINOR_STATE)


def spinor_matrix_form() -> RepresentationSet:
    mats, scales = matrices_from_system(build_spin1_spinor_system())
    return RepresentationSet("spin1-spinor", mats, provenance="spinor form of the spin-1 system",
                             metadata={"state": [s.name for s in SPINOR_STATE],
                                       "row_scales": [str(k) for k in scales]})


# -- spinor <-> tensor --------------------------------------------------------


def tensor_map(a: Poly | GaussianRational, b: Poly | GaussianRational) -> list[list[Poly]]:
    """Rows express ``(psi^{mn}, psi^mu)`` through the spinor unknowns.

    ``psi^mu`` comes from ``zeta`` with both indices raised.  ``psi^{mn}`` is
    ``a`` times the selfdual tensor of ``eta`` plus ``b`` times the
    antiselfdual tensor of ``chi``, with index positions mirrored: the
    lower-index components ``eta_AC`` enter the upper-to-lower formula and
    the result is read with upper tensor indices.  Other placements admit no
    constants at all (see the tests).
    """
    sd = tensor_from_symspinor(SymSpinor(*ETA, UNDOTTED, UP), "selfdual").lowered()
    asd = tensor_from_symspinor(SymSpinor(*CHI, DOTTED, UP), "antiselfdual").lowered()
    vec = spinor_to_vector(zeta_spinor())
    images = [sd.comps[i] * a + asd.comps[i] * b for i in range(6)] + vec
    return [img.linear_split(SPINOR_STATE)[0] for img in images]


def solve_tensor_constants() -> tuple[GaussianRational, GaussianRational] | None:
    """Constants ``(a, b)`` for which the spinor-to-tensor map intertwines the two operators."""
    a, b = parameter("a"), parameter("b")
    t = PolyMatrix(TABLE, tensor_map(a, b))
    lt = build_beta(1).operator()
    ls = spinor_matrix_form().operator()
    diff = lt * t - t * ls
    rows = []
    unknowns = (sym(a), sym(b))
    for row in diff.entries:
        for entry in row:
            (ca, cb), rest = entry.linear_split(unknowns)
            monos = set(ca.terms) | set(cb.terms) | set(rest.terms)
            for mono in sorted(monos):
                rows.append([ca.terms.get(mono, GaussianRational(0)), cb.terms.get(mono, GaussianRational(0)),
                             rest.terms.get(mono, GaussianRational(0))])
    basis = nullspace(rows)
    if len(basis) != 1 or not basis[0][2]:
        return None
    v = basis[0]
    return v[0] / v[2], v[1] / v[2]


def verify_spinor_tensor_equivalence_spin1() -> list[CheckResult]:
    anchor = "spinor spin-1 system <-> p^m psi^n - p^n psi^m = m psi^{mn}, p_m psi^{mn} = m psi^n"
    consts = solve_tensor_constants()
    if consts is None:
        return [bool_check("spin1.tensor.constants", False, anchor, residuals=["no consistent (a, b)"])]
    a, b = consts
    t = PolyMatrix(TABLE, tensor_map(a, b))
    spinor_sys = build_spin1_spinor_system()
    _, scales = matrices_from_system(spinor_sys)
    tensor_sys = kdp_spin1_system()
    image = {s: v for s, v in zip(tensor_sys.unknowns, t.apply([Poly.symbol(TABLE, u) for u in SPINOR_STATE]))}
    spinor_res = [r / k for r, k in zip(spinor_sys.residuals(), scales)]
    transported = t.apply(spinor_res)
    residuals = [eq.residual.subs(image) - tr for eq, tr in zip(tensor_sys, transported)]
    invertible = not determinant(t).is_zero()
    t_res = tensor_sys.residuals()
    # p_nu psi^nu = 0 follows from the divergence rows and antisymmetry
    vec = [Poly.symbol(TABLE, s) for s in tensor_sys.unknowns[6:]]
    div = sum((METRIC[nu] * P[nu] * t_res[6 + nu] for nu in range(4)), const(0))
    spin_cond = div + M * minkowski(P, vec)
    detail = {"a": str(a), "b": str(b)}
    return [
        bool_check("spin1.tensor.constants", invertible, anchor, detail,
                   residuals=["0"] if invertible else ["map is singular"]),
        zero_check("spin1.tensor.curl-and-divergence", residuals, anchor, detail),
        zero_check("spin1.tensor.curl-01", [residuals[0]], "p^0 psi^1 - p^1 psi^0 = m psi^{01}", detail),
        zero_check("spin1.tensor.divergence-0", [residuals[6]], "p_m psi^{m0} = m psi^0", detail),
        zero_check("spin1.tensor.spin-condition", [spin_cond], "p_n p_m psi^{mn} = 0 gives p_n psi^n = 0"),
    ]


# -- Hagen-Hurley halves --------------------------------------------------------


@dataclass(frozen=True)
class HagenHurleyHalf:
    chirality: str
    system: EquationSystem       # generated from the index equations, all index values
    expansion: EquationSystem    # the eight hand-written component lines
    state: tuple                 # matrix-form state order

    @property
    def scalar(self) -> Poly:
        return ETA[1] if self.chirality == UNDOTTED_ETA else CHI[1]

    def matrix_rows(self) -> EquationSystem:
        """The seven lines other than the antisymmetric constraint, one per state component."""
        by_mass = {}
        for eq in self.expansion:
            m_part = eq.residual.coefficient(sym(M))
            fields = m_part.symbols()
            if len(fields) == 1:
                by_mass[next(iter(fields))] = eq
        return EquationSystem.of([by_mass[s] for s in self.state], self.state)


def _undotted_expansion() -> EquationSystem:
    z = zeta
    lines = [
        (pm("_1^1") * z(1, 1) + pm("_1^2") * z(1, 2), M * ETA[0], "a"),
        ((pm("_1^1") * z(2, 1) + pm("_1^2") * z(2, 2) + pm("_2^1") * z(1, 1) + pm("_2^2") * z(1, 2)) * HALF,
         M * ETA[1], "b"),
        (pm("_1^1") * z(2, 1) + pm("_1^2") * z(2, 2) - pm("_2^1") * z(1, 1) - pm("_2^2") * z(1, 2), const(0), "c"),
        (pm("_2^1") * z(2, 1) + pm("_2^2") * z(2, 2), M * ETA[2], "d"),
        (pm("^1_1") * ETA[0] + pm("^2_1") * ETA[1], -M * z(1, 1), "e"),
        (pm("^1_2") * ETA[0] + pm("^2_2") * ETA[1], -M * z(1, 2), "f"),
        (pm("^1_1") * ETA[1] + pm("^2_1") * ETA[2], -M * z(2, 1), "g"),
        (pm("^1_2") * ETA[1] + pm("^2_2") * ETA[2], -M * z(2, 2), "h"),
    ]
    return EquationSystem.of([Equation(l, r, lab) for l, r, lab in lines], ETA_SYMBOLS + ZETA_SYMBOLS)


def _dotted_expansion() -> EquationSystem:
    z = zeta
    lines = [
        (pm("^1_1") * z(1, 1) + pm("^2_1") * z(2, 1), M * CHI[0], "1"),
        ((pm("^1_1") * z(1, 2) + pm("^2_1") * z(2, 2) + pm("^1_2") * z(1, 1) + pm("^2_2") * z(2, 1)) * HALF,
         M * CHI[1], "2"),
        (pm("^1_1") * z(1, 2) + pm("^2_1") * z(2, 2) - pm("^1_2") * z(1, 1) - pm("^2_2") * z(2, 1), const(0), "3"),
        (pm("^1_2") * z(1, 2) + pm("^2_2") * z(2, 2), M * CHI[2], "4"),
        (pm("_1^1") * CHI[0] + pm("_1^2") * CHI[1], -M * z(1, 1), "5"),
        (pm("_2^1") * CHI[0] + pm("_2^2") * CHI[1], -M * z(2, 1), "6"),
        (pm("_1^1") * CHI[1] + pm("_1^2") * CHI[2], -M * z(1, 2), "7"),
        (pm("_2^1") * CHI[1] + pm("_2^2") * CHI[2], -M * z(2, 2), "8"),
    ]
    return EquationSystem.of([Equation(l, r, lab) for l, r, lab in lines], CHI_SYMBOLS + ZETA_SYMBOLS)


def _generated_half(chirality: str) -> EquationSystem:
    eqs = []
    if chirality == UNDOTTED_ETA:
        for a, c in IDX:
            lhs = sum((pm(f"_{a}^{b}") * zeta(c, b) for b in (1, 2)), const(0))
            eqs.append(Equation(lhs, M * eta(a, c), f"p_{a}^B' zeta_{c}B' = m eta_{a}{c}"))
        for a, b in IDX:
            lhs = sum((pm(f"^{c}_{b}") * eta(a, c) for c in (1, 2)), const(0))
            eqs.append(Equation(lhs, -M * zeta(a, b), f"p^C_{b}' eta_{a}C = -m zeta_{a}{b}'"))
        return EquationSystem.of(eqs, ETA_SYMBOLS + ZETA_SYMBOLS)
    if chirality == DOTTED_CHI:
        for b, d in IDX:
            lhs = sum((pm(f"^{a}_{b}") * zeta(a, d) for a in (1, 2)), const(0))
            eqs.append(Equation(lhs, M * chi(b, d), f"p^A_{b}' zeta_A{d}' = m chi_{b}'{d}'"))
        for a, b in IDX:
            lhs = sum((pm(f"_{a}^{d}") * chi(b, d) for d in (1, 2)), const(0))
            eqs.append(Equation(lhs, -M * zeta(a, b), f"p_{a}^D' chi_{b}'D' = -m zeta_{a}{b}'"))
        return EquationSystem.of(eqs, CHI_SYMBOLS + ZETA_SYMBOLS)
    raise ValueError(f"unknown chirality {chirality!r}")


def build_hagen_hurley_half(chirality: str) -> HagenHurleyHalf:
    gen = _generated_half(chirality)
    if chirality == UNDOTTED_ETA:
        return HagenHurleyHalf(chirality, gen, _undotted_expansion(), ETA_SYMBOLS + ZETA_SYMBOLS)
    return HagenHurleyHalf(chirality, gen, _dotted_expansion(), CHI_SYMBOLS + ZETA_SYMBOLS)


def verify_hh_expansion(chirality: str) -> CheckResult:
    """The eight written lines are the symmetric/antisymmetric recombination of the generated ones."""
    half = build_hagen_hurley_half(chirality)
    g = half.system.residuals()
    # generated order: (1,1), (1,2), (2,1), (2,2) then the four second-line equations
    combos = [g[0], (g[1] + g[2]) * HALF, g[1] - g[2], g[3]]
    if chirality == UNDOTTED_ETA:
        combos += g[4:8]
    else:
        combos += [g[4], g[6], g[5], g[7]]
    residuals = [e.residual - c for e, c in zip(half.expansion, combos)]
    tag = "eta" if chirality == UNDOTTED_ETA else "chi"
    return zero_check(f"spin1.hh.{tag}.expansion", residuals,
                      "component lines = symmetric and antisymmetric parts of the index equations")


def verify_hh_implies_kdp1() -> list[CheckResult]:
    eta_half = _generated_half(UNDOTTED_ETA).residuals()
    chi_half = _generated_half(DOTTED_CHI).residuals()
    full = build_spin1_spinor_system().residuals()
    pos = {ab: i for i, ab in enumerate(IDX)}
    g1, g2, g3 = [], [], []
    for n, (a, c) in enumerate(((1, 1), (1, 2), (2, 2))):
        g1.append(full[n] - eta_half[pos[(a, c)]] - eta_half[pos[(c, a)]])
    for n, (b, d) in enumerate(((1, 1), (1, 2), (2, 2))):
        g2.append(full[3 + n] - chi_half[pos[(b, d)]] - chi_half[pos[(d, b)]])
    for n, ab in enumerate(IDX):
        g3.append(full[6 + n] - eta_half[4 + pos[ab]] - chi_half[4 + pos[ab]])
    return [
        zero_check("spin1.hh-implies-kdp.group-1", g1, "p_A^B' zeta_CB' + p_C^B' zeta_AB' = 2m eta_AC"),
        zero_check("spin1.hh-implies-kdp.group-2", g2, "p^A_B' zeta_AD' + p^A_D' zeta_AB' = 2m chi_B'D'"),
        zero_check("spin1.hh-implies-kdp.group-3", g3, "p_A^C' chi_B'C' + p^C_B' eta_AC = -2m zeta_AB'"),
    ]


def spin_condition_factor(chirality: str) -> tuple[GaussianRational | None, Poly, Poly]:
    """Rewrite the antisymmetric line through ``psi^mu`` and compare with ``p_mu psi^mu``."""
    half = build_hagen_hurley_half(chirality)
    line = half.expansion[2].residual
    psi = [field(f"psi^{{{mu}}}") for mu in range(4)]
    lowered = vector_to_spinor(psi).all_down()
    image = line.subs({zeta(a, b): lowered[a, b] for a, b in IDX})
    target = minkowski(P, psi)
    return proportionality(image, target), image, target


def verify_spin1_condition(chirality: str) -> list[CheckResult]:
    tag = "eta" if chirality == UNDOTTED_ETA else "chi"
    k, image, target = spin_condition_factor(chirality)
    anchor = "antisymmetric line = k p_mu psi^mu"
    out = [bool_check(f"spin1.condition.{tag}", k is not None, anchor, {"k": str(k)},
                      residuals=["0"] if k is not None else [image])]
    # rest frame: only psi^0 survives
    rest = {P_SYMBOLS[0]: M, P_SYMBOLS[1]: 0, P_SYMBOLS[2]: 0, P_SYMBOLS[3]: 0}
    at_rest = image.subs(rest)
    psi0 = field("psi^{0}")
    ok = proportionality(at_rest, M * psi0) is not None
    out.append(bool_check(f"spin1.condition.{tag}.rest-frame", ok, "at p = (m,0,0,0) the condition is m psi^0 = 0",
                          {"restricted": str(at_rest)}, residuals=["0"] if ok else [at_rest]))
    return out


# -- hat / check transforms -------------------------------------------------------


@dataclass(frozen=True)
class HatTransform:
    kind: str                                  # "hat" or "check"
    definitions: Mapping[Poly, Poly]           # shifted symbol -> zeta + shift * m_inv
    shifts: Mapping[Poly, Poly]                # shifted symbol -> momentum * scalar (the cleared shift)

    def forward(self) -> dict:
        """Substitution ``shifted -> zeta + shift / m``."""
        return dict(self.definitions)

    def inverse(self) -> dict:
        """Substitution ``zeta -> shifted - shift / m``."""
        out = {}
        for shifted, shift in self.shifts.items():
            base = self.definitions[shifted] - shift * M_INV
            out[base] = shifted - shift * M_INV
        return out


def hat_transform() -> HatTransform:
    shifts = {
        zetahat(1, 1): pm("^2_1") * ETA[1],
        zetahat(1, 2): pm("^2_2") * ETA[1],
        zetahat(2, 1): pm("^1_1") * ETA[1],
        zetahat(2, 2): pm("^1_2") * ETA[1],
    }
    base = {zetahat(a, b): zeta(a, b) for a, b in IDX}
    return HatTransform("hat", {h: base[h] + s * M_INV for h, s in shifts.items()}, shifts)


def check_transform() -> HatTransform:
    shifts = {
        zetacheck(1, 1): pm("_1^2") * CHI[1],
        zetacheck(2, 1): pm("_2^2") * CHI[1],
        zetacheck(1, 2): pm("_1^1") * CHI[1],
        zetacheck(2, 2): pm("_2^1") * CHI[1],
    }
    base = {zetacheck(a, b): zeta(a, b) for a, b in IDX}
    return HatTransform("check", {h: base[h] + s * M_INV for h, s in shifts.items()}, shifts)


def transform_for(chirality: str) -> HatTransform:
    return hat_transform() if chirality == UNDOTTED_ETA else check_transform()


def verify_transform_roundtrip(kind: str) -> list[CheckResult]:
    tr = hat_transform() if kind == "hat" else check_transform()
    fwd, inv = tr.forward(), tr.inverse()
    roundtrip = []
    for shifted, expr in fwd.items():
        roundtrip.append((expr.subs(inv).reduce([INVERSE_MASS]) - shifted))
    for base, expr in inv.items():
        roundtrip.append(expr.subs(fwd).reduce([INVERSE_MASS]) - base)
    cleared = []
    for shifted, expr in fwd.items():
        # m * shifted = m * zeta + shift
        base = expr - tr.shifts[shifted] * M_INV
        cleared.append((M * expr).reduce([INVERSE_MASS]) - (M * base + tr.shifts[shifted]))
    return [
        zero_check(f"spin1.{kind}.roundtrip", roundtrip, "inverse substitution restores every component"),
        zero_check(f"spin1.{kind}.cleared-form", cleared, "m zeta' = m zeta + p x agrees with zeta' = zeta + p x / m"),
    ]


# -- constituent systems -------------------------------------------------------------


@dataclass(frozen=True)
class ConstituentSystem1:
    label: str                 # eta-1, eta-2, chi-1, chi-2
    system: EquationSystem     # three hand-written lines
    scalar: Poly               # eta_{11}, eta_{22}, chi_{1'1'} or chi_{2'2'}
    shifted: tuple[Poly, Poly]
    u: tuple[Poly, Poly]       # first lines read u_i * scalar = -m * shifted_i
    family: str

    @property
    def state(self) -> list[Poly]:
        return [self.shifted[0], self.shifted[1], self.scalar]

    def matrix_form(self) -> RepresentationSet:
        return build_rho(self.family)

    def identity_residual(self) -> Poly:
        return self.u[1] * self.shifted[0] - self.u[0] * self.shifted[1]


CONSTITUENT_LABELS = ("eta-1", "eta-2", "chi-1", "chi-2")


def build_constituent1(label: str) -> ConstituentSystem1:
    if label == "eta-1":
        x, zs, u, v, fam = ETA[0], (zetahat(1, 1), zetahat(1, 2)), (pm("^1_1"), pm("^1_2")), \
            (pm("_1^1"), pm("_1^2")), "s1-eta"
    elif label == "eta-2":
        x, zs, u, v, fam = ETA[2], (zetahat(2, 1), zetahat(2, 2)), (pm("^2_1"), pm("^2_2")), \
            (pm("_2^1"), pm("_2^2")), "s1-eta-tilde"
    elif label == "chi-1":
        x, zs, u, v, fam = CHI[0], (zetacheck(1, 1), zetacheck(2, 1)), (pm("_1^1"), pm("_2^1")), \
            (pm("^1_1"), pm("^2_1")), "s1-chi"
    elif label == "chi-2":
        x, zs, u, v, fam = CHI[2], (zetacheck(1, 2), zetacheck(2, 2)), (pm("_1^2"), pm("_2^2")), \
            (pm("^1_2"), pm("^2_2")), "s1-chi-tilde"
    else:
        raise ValueError(f"unknown constituent {label!r}")
    eqs = [
        Equation(u[0] * x, -M * zs[0], f"{label} line 1"),
        Equation(u[1] * x, -M * zs[1], f"{label} line 2"),
        Equation(v[0] * zs[0] + v[1] * zs[1], M * x, f"{label} line 3"),
    ]
    system = EquationSystem.of(eqs, [sym(zs[0]), sym(zs[1]), sym(x)])
    return ConstituentSystem1(label, system, x, zs, u, fam)


def scalar_equation(chirality: str) -> Equation:
    x = ETA[1] if chirality == UNDOTTED_ETA else CHI[1]
    return Equation(P_SQUARED * x, M * M * x, "p_mu p^mu x = m^2 x")


def apply_hat_transform(half: HagenHurleyHalf) -> tuple[tuple[ConstituentSystem1, ConstituentSystem1], Equation]:
    if half.chirality == UNDOTTED_ETA:
        pair = (build_constituent1("eta-1"), build_constituent1("eta-2"))
    else:
        pair = (build_constituent1("chi-1"), build_constituent1("chi-2"))
    return pair, scalar_equation(half.chirality)


def _rules(chirality: str):
    scalar = ETA[1] if chirality == UNDOTTED_ETA else CHI[1]
    return [mass_shell(scalar), INVERSE_MASS]


def verify_split_equivalence1(chirality: str) -> list[CheckResult]:
    tag = "eta" if chirality == UNDOTTED_ETA else "chi"
    half = build_hagen_hurley_half(chirality)
    (c1, c2), kg = apply_hat_transform(half)
    fwd = transform_for(chirality).forward()
    exp = half.expansion.residuals()

    def unhat(poly: Poly) -> Poly:
        return poly.subs(fwd).reduce([INVERSE_MASS])

    # (i) constituent lines are expansion lines after undoing the shift
    # (constituent, its line, expansion line); the same layout serves both chiralities
    pairing = [(c1, 0, 4), (c1, 1, 5), (c1, 2, 0), (c2, 0, 6), (c2, 1, 7), (c2, 2, 3)]
    ident, factors = [], []
    for c, line, target in pairing:
        r = unhat(c.system[line].residual)
        k = proportionality(r, exp[target])
        factors.append(f"{c.label}:{line + 1}->{half.expansion[target].label}:{k}")
        ident.append(r - exp[target] * k if k is not None else r - exp[target])

    # (ii) the identities follow from the first two lines of each constituent
    id_res = []
    for c in (c1, c2):
        r1, r2 = c.system[0].residual, c.system[1].residual
        id_res.append((c.identity_residual() - (c.u[1] * r1 - c.u[0] * r2) * M_INV).reduce([INVERSE_MASS]))

    # (iii) sum of identities = antisymmetric (spin-1) line
    total = unhat(c1.identity_residual() + c2.identity_residual())
    k3 = proportionality(exp[2], total)
    sum_res = [exp[2] - total * k3] if k3 is not None else [exp[2]]

    # (iv) difference of identities = 2 * symmetric line modulo the scalar mass shell
    diff = unhat(c1.identity_residual() - c2.identity_residual())
    target = (2 * exp[1] - 2 * M_INV * kg.residual).reduce([INVERSE_MASS])
    k4 = proportionality(diff, target)
    diff_res = [diff - target * k4] if k4 is not None else [diff]
    shell_res = [target.reduce(_rules(chirality)) - (2 * exp[1]).reduce(_rules(chirality))]

    # (v) every expansion line is a combination of constituent lines and the scalar equation
    cres = {(id(c), i): unhat(c.system[i].residual) for c in (c1, c2) for i in range(3)}
    id1 = (c1.u[1] * cres[(id(c1), 0)] - c1.u[0] * cres[(id(c1), 1)]) * M_INV
    id2 = (c2.u[1] * cres[(id(c2), 0)] - c2.u[0] * cres[(id(c2), 1)]) * M_INV
    restore = []
    for c, line, target_line in pairing:
        k = proportionality(cres[(id(c), line)], exp[target_line])
        restore.append(exp[target_line] * (k or 1) - cres[(id(c), line)])
    if k3 is not None:
        restore.append(exp[2] - (id1 + id2) * k3)
    if k4 is not None:
        restore.append(2 * exp[1] - ((id1 - id2) * k4.inverse() + 2 * M_INV * kg.residual))
    restore = [r.reduce([INVERSE_MASS]) for r in restore]
    if k3 is None or k4 is None:
        restore.append(const(1))

    detail = {"line_factors": factors, "sum_factor": str(k3), "difference_factor": str(k4)}
    return [
        zero_check(f"spin1.split.{tag}.lines", ident, "shifted three-component lines = expansion lines", detail),
        zero_check(f"spin1.split.{tag}.identities", id_res,
                   "identities follow from the first two lines of each three-component system"),
        zero_check(f"spin1.split.{tag}.identity-sum", sum_res, "sum of identities = spin-1 condition line",
                   {"k": str(k3)}),
        zero_check(f"spin1.split.{tag}.identity-difference", diff_res + shell_res,
                   "difference of identities = symmetric line modulo p_mu p^mu x = m^2 x", {"k": str(k4)}),
        zero_check(f"spin1.split.{tag}.restore", restore,
                   "all eight lines follow from the split systems and the scalar equation"),
    ]


def verify_matrix_forms1() -> list[CheckResult]:
    out = []
    for label in CONSTITUENT_LABELS:
        c = build_constituent1(label)
        expanded = matrix_form_system(c.matrix_form(), c.state)
        out.append(compare_systems(expanded, c.system, f"spin1.matrix-form.{label}",
                                   f"rho_mu p^mu Psi = m Psi expands to the {label} lines"))
    res = verify_rho_conjugation()
    out.append(res)
    return out


def verify_hh_matrix_forms() -> list[CheckResult]:
    from .representations import build_hagen_hurley

    out = []
    for chirality, name in ((UNDOTTED_ETA, "eta"), (DOTTED_CHI, "chi")):
        half = build_hagen_hurley_half(chirality)
        rep = build_hagen_hurley(chirality)
        rows = half.matrix_rows()
        expanded = matrix_form_system(rep, [Poly.symbol(TABLE, s) for s in rows.unknowns])
        out.append(compare_systems(expanded, rows, f"spin1.hh.{name}.matrix-form",
                                   "7x7 matrix form expands to the component lines"))
    return out


# -- reconstruction ---------------------------------------------------------------------


def _numeric(poly: Poly, point: dict) -> GaussianRational:
    v = poly.subs(point).reduce([INVERSE_MASS])
    if not v.is_constant():
        raise ValueError(f"expression did not evaluate to a number: {v}")
    return v.constant_value()


def constituent_holds(c: ConstituentSystem1, values: Sequence, point: dict) -> bool:
    sub = dict(point)
    sub.update({x: GaussianRational.coerce(v) for x, v in zip(c.state, values)})
    return all(not eq.residual.subs(sub).reduce([INVERSE_MASS]) for eq in c.system)


def reconstruct_full_solution(parts: Mapping[str, Sequence], scalar, p: Sequence, m,
                              chirality: str = UNDOTTED_ETA) -> dict:
    """Assemble ``(zeta, eta, chi)`` from two constituent solutions and the scalar.

    ``parts`` maps the two constituent labels of ``chirality`` to their state
    vectors at the same momentum ``p``.  The opposite-chirality spinor is
    completed from the remaining first-order group.  Returns a map from field
    symbols to exact values.
    """
    from .planewave import make_onshell

    mom = make_onshell(m, ("custom", p))
    point = numeric_momentum(mom.p, mom.m)
    labels = ("eta-1", "eta-2") if chirality == UNDOTTED_ETA else ("chi-1", "chi-2")
    if set(parts) != set(labels):
        raise ValueError(f"expected parts {labels}")
    values: dict = {}
    for label in labels:
        c = build_constituent1(label)
        if len(parts[label]) != 3:
            raise ValueError(f"{label}: expected three components")
        if not constituent_holds(c, parts[label], point):
            raise ValueError(f"{label}: values do not solve the system at this momentum")
        values.update({x: GaussianRational.coerce(v) for x, v in zip(c.state, parts[label])})
    own = ETA if chirality == UNDOTTED_ETA else CHI
    values[own[1]] = GaussianRational.coerce(scalar)
    tr = transform_for(chirality)
    full = dict(point)
    full.update(values)
    out = {}
    for base, expr in tr.inverse().items():
        out[base] = _numeric(expr, full)
    for x in own:
        out[x] = values[x]
    # opposite chirality from group 2 (or group 1) of the spinor system
    other = CHI if chirality == UNDOTTED_ETA else ETA
    sys = build_spin1_spinor_system()
    rows = range(3, 6) if chirality == UNDOTTED_ETA else range(0, 3)
    sub = dict(point)
    sub.update(out)
    m_val = GaussianRational.coerce(m)
    for x, r in zip(other, rows):
        lhs = _numeric(sys[r].lhs, sub)
        out[x] = lhs / (2 * m_val)
    return out


def spinor_residuals_at(values: Mapping, p: Sequence, m) -> list[Poly]:
    point = numeric_momentum(p, m)
    point.update(values)
    return [r.subs(point).reduce([INVERSE_MASS]) for r in build_spin1_spinor_system().residuals()]


def tensor_solution(values: Mapping) -> list[GaussianRational]:
    """Map a spinor solution to the 10 tensor components with the solved constants."""
    consts = solve_tensor_constants()
    if consts is None:
        raise RuntimeError("spinor and tensor forms could not be matched")
    t = PolyMatrix(TABLE, tensor_map(*consts))
    vec = [Poly.const(TABLE, values[Poly.symbol(TABLE, s)]) if Poly.symbol(TABLE, s) in values
           else Poly.const(TABLE, 0) for s in SPINOR_STATE]
    return [x.constant_value() for x in t.apply(vec)]
