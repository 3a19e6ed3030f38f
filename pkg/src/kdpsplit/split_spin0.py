"""Spin-0: spinor form of the five-component system and its two
three-component halves (dotted index fixed to 1 or to 2)."""

from __future__ import annotations

from dataclasses import dataclass

from .checks import CheckResult, bool_check, zero_check
from .exact import Equation, EquationSystem, Poly, PolyMatrix, equivalence_factor, nullspace, rank
from .representations import (
    RepresentationSet, build_rho, compare_systems, kdp_spin0_system, mass_content, matrix_form_system,
)
from .spinor_calculus import pm, vector_to_spinor
from .symbols import INVERSE_MASS, M, M_INV, P_SQUARED, TABLE, const, field, mass_shell, numeric_momentum, sym

DOTTED_1 = "dotted-1"
DOTTED_2 = "dotted-2"
HALVES = (DOTTED_1, DOTTED_2)
IDX = ((1, 1), (2, 1), (1, 2), (2, 2))

PSI = field("psi")


def psi(a: int, b: int) -> Poly:
    return field(f"psi^{{{a}{b}'}}")


SPINOR_STATE = tuple(sym(psi(a, b)) for a, b in IDX) + (sym(PSI),)


def build_spin0_spinor_system() -> EquationSystem:
    """``p^{AB'} psi = m psi^{AB'}`` (four lines) and ``p_{AB'} psi^{AB'} = 2 m psi``."""
    eqs = [Equation(pm(f"^{a}^{b}") * PSI, M * psi(a, b), f"p^{a}{b}' psi = m psi^{a}{b}'") for a, b in IDX]
    contraction = sum((pm(f"_{a}_{b}") * psi(a, b) for a, b in IDX), const(0))
    eqs.append(Equation(contraction, 2 * M * PSI, "p_AB' psi^AB' = 2 m psi"))
    return EquationSystem.of(eqs, SPINOR_STATE)


def verify_spinor_form0() -> list[CheckResult]:
    """The spinor system is the vector system with ``psi^{AB'}`` built from ``psi^mu``."""
    tensor = kdp_spin0_system()
    spinor = build_spin0_spinor_system()
    vec = [Poly.symbol(TABLE, s) for s in tensor.unknowns[:4]]
    image = vector_to_spinor(vec)
    mapping = {psi(a, b): image[a, b] for a, b in IDX}
    t_res = tensor.residuals()
    res_spinor = vector_to_spinor(t_res[:4])
    rows = [spinor[i].residual.subs(mapping) - res_spinor[a, b] for i, (a, b) in enumerate(IDX)]
    contraction = spinor[4].residual.subs(mapping) - 2 * t_res[4]
    return [
        zero_check("spin0.spinor-form.components", rows, "p^{AB'} psi = m psi^{AB'} from p^mu psi = m psi^mu"),
        zero_check("spin0.spinor-form.contraction", [contraction],
                   "p_{AB'} psi^{AB'} = 2 p_mu psi^mu, so the last line is twice p_mu psi^mu = m psi"),
    ]


@dataclass(frozen=True)
class ConstituentSystem0:
    half: str
    system: EquationSystem
    state: tuple[Poly, Poly, Poly]
    family: str

    @property
    def dotted(self) -> int:
        return 1 if self.half == DOTTED_1 else 2

    def matrix_form(self) -> RepresentationSet:
        return build_rho(self.family)

    def identity_residual(self) -> Poly:
        h = self.dotted
        return pm(f"^2^{h}") * psi(1, h) - pm(f"^1^{h}") * psi(2, h)


def build_constituent0(half: str, wrong_sign: bool = False) -> ConstituentSystem0:
    """Three lines with the dotted index fixed.

    ``wrong_sign`` flips the second term of the contraction line; it exists
    only as a negative control for the mass check.
    """
    if half not in HALVES:
        raise ValueError(f"unknown half {half!r}")
    h = 1 if half == DOTTED_1 else 2
    sign = -1 if wrong_sign else 1
    eqs = [
        Equation(pm(f"^1^{h}") * PSI, M * psi(1, h), f"p^1{h}' psi = m psi^1{h}'"),
        Equation(pm(f"^2^{h}") * PSI, M * psi(2, h), f"p^2{h}' psi = m psi^2{h}'"),
        Equation(pm(f"_1_{h}") * psi(1, h) + sign * pm(f"_2_{h}") * psi(2, h), M * PSI,
                 f"p_1{h}' psi^1{h}' + p_2{h}' psi^2{h}' = m psi"),
    ]
    state = (psi(1, h), psi(2, h), PSI)
    return ConstituentSystem0(half, EquationSystem.of(eqs, [sym(x) for x in state]), state,
                              "s0" if h == 1 else "s0-tilde")


def _first_lines_solved(c: ConstituentSystem0) -> dict:
    h = c.dotted
    return {psi(1, h): M_INV * pm(f"^1^{h}") * PSI, psi(2, h): M_INV * pm(f"^2^{h}") * PSI}


def constituent_mass_residual(c: ConstituentSystem0) -> Poly:
    """``m`` times the third line after eliminating ``psi^{Ah'}``, minus ``(p.p - m^2) psi``."""
    third = c.system[2].residual.subs(_first_lines_solved(c))
    return (M * third).reduce([INVERSE_MASS]) - (P_SQUARED * PSI - M * M * PSI)


def verify_constituent_mass(half: str, wrong_sign: bool = False) -> CheckResult:
    c = build_constituent0(half, wrong_sign)
    suffix = ".wrong-sign" if wrong_sign else ""
    return zero_check(f"spin0.mass.{half}{suffix}", [constituent_mass_residual(c)],
                      "psi^{Ah'} = p^{Ah'} psi / m in the third line gives p_mu p^mu psi = m^2 psi")


def verify_identity0(half: str) -> list[CheckResult]:
    c = build_constituent0(half)
    h = c.dotted
    direct = c.identity_residual().subs(_first_lines_solved(c))
    r1, r2 = c.system[0].residual, c.system[1].residual
    combo = (c.identity_residual() + M_INV * (pm(f"^2^{h}") * r1 - pm(f"^1^{h}") * r2)).reduce([INVERSE_MASS])
    anchor = f"p^2{h}' psi^1{h}' = p^1{h}' psi^2{h}'"
    return [
        zero_check(f"spin0.identity.{half}", [direct], anchor),
        zero_check(f"spin0.identity.{half}.combination", [combo], anchor + " as a combination of the first two lines"),
    ]


def verify_matrix_forms0() -> list[CheckResult]:
    out = []
    for half in HALVES:
        c = build_constituent0(half)
        out.append(compare_systems(matrix_form_system(c.matrix_form(), list(c.state)), c.system,
                                   f"spin0.matrix-form.{half}", f"rho_mu p^mu Phi = m Phi expands to the {half} lines"))
        det = mass_content(c.matrix_form())
        out.append(zero_check(f"spin0.determinant.{half}", [det - M * (P_SQUARED - M * M)],
                              "det(rho_mu p^mu - m) = m (p_mu p^mu - m^2)"))
    return out


def combined_system() -> EquationSystem:
    """Both halves with one shared ``psi`` (six lines, five unknowns)."""
    eqs = list(build_constituent0(DOTTED_1).system) + list(build_constituent0(DOTTED_2).system)
    return EquationSystem.of(eqs, SPINOR_STATE)


def block_representation() -> PolyMatrix:
    """The 6x6 block-diagonal operator acting on ``(Phi, Phi~)``."""
    a = build_rho("s0").operator()
    b = build_rho("s0-tilde").operator()
    z = PolyMatrix.zeros(TABLE, 3)
    return PolyMatrix.block([[a, z], [z, b]])


def verify_constituents_imply_kdp0() -> list[CheckResult]:
    d1 = build_constituent0(DOTTED_1).system.residuals()
    d2 = build_constituent0(DOTTED_2).system.residuals()
    full = build_spin0_spinor_system().residuals()
    by_index = {(1, 1): d1[0], (2, 1): d1[1], (1, 2): d2[0], (2, 2): d2[1]}
    components = [full[i] - by_index[ab] for i, ab in enumerate(IDX)]
    contraction = full[4] - (d1[2] + d2[2])
    # block form with the two copies of psi identified
    psi_b = field("psi~")
    state = [psi(1, 1), psi(2, 1), PSI, psi(1, 2), psi(2, 2), psi_b]
    lhs = block_representation().apply(state)
    block = [l - M * s for l, s in zip(lhs, state)]
    shared = [r.subs({psi_b: PSI}) for r in block]
    factors = [equivalence_factor(r, s) for r, s in zip(shared, d1 + d2)]
    block_res = [r - k * s if k is not None else r for r, s, k in zip(shared, d1 + d2, factors)]
    return [
        zero_check("spin0.implies-kdp.components", components, "p^{AB'} psi = m psi^{AB'}"),
        zero_check("spin0.implies-kdp.contraction", [contraction], "the two third lines add up to p_AB' psi^AB' = 2 m psi"),
        zero_check("spin0.implies-kdp.block-form", block_res, "block-diagonal form reproduces both halves",
                   {"row_factors": [str(k) for k in factors]}),
    ]


def verify_reverse_inclusion0(p=(5, 3, 0, 0), m=4) -> list[CheckResult]:
    """Both directions, shared ``psi`` and independent copies.

    With one ``psi`` the five-line system already implies ``p.p psi = m^2 psi``
    and hence each third line separately.  With independent copies the block
    system has a larger solution space; a witness outside the five-line system
    is exhibited.
    """
    out = []
    full = build_spin0_spinor_system()
    solved = {psi(a, b): M_INV * pm(f"^{a}^{b}") * PSI for a, b in IDX}
    kg = (M * full[4].residual.subs(solved)).reduce([INVERSE_MASS]) - 2 * (P_SQUARED * PSI - M * M * PSI)
    out.append(zero_check("spin0.reverse.shared.mass-shell", [kg],
                          "five-line system implies p_mu p^mu psi = m^2 psi"))
    rules = [mass_shell(PSI), INVERSE_MASS]
    thirds = []
    for half in HALVES:
        c = build_constituent0(half)
        thirds.append(c.system[2].residual.subs(solved).reduce(rules))
    out.append(zero_check("spin0.reverse.shared.third-lines", thirds,
                          "each third line follows modulo p_mu p^mu psi = m^2 psi",
                          {"outcome": "reverse inclusion holds with a shared psi"}))

    # independent copies: compare solution-space dimensions at one on-shell point
    point = numeric_momentum(p, m)
    block = (block_representation() - PolyMatrix.identity(TABLE, 6) * M).subs(point).reduce([INVERSE_MASS])
    kdp = full.coefficient_matrix().subs(point).reduce([INVERSE_MASS])
    block_null = nullspace(block.constant_rows())
    kdp_null = 5 - rank(kdp.constant_rows())
    # witness: a first-half solution with the second half zero (blocks decouple)
    witness = next((v[:3] for v in block_null if any(v[:3])), None)
    residuals = []
    if witness is not None:
        sub = dict(point)
        sub.update({psi(1, 1): witness[0], psi(2, 1): witness[1], PSI: witness[2], psi(1, 2): 0, psi(2, 2): 0})
        residuals = [r.subs(sub).reduce([INVERSE_MASS]) for r in full.residuals()]
    violated = [i + 1 for i, r in enumerate(residuals) if not r.is_zero()]
    ok = len(block_null) > kdp_null and bool(violated)
    out.append(bool_check("spin0.reverse.independent-copies", ok,
                          "block system with independent psi admits solutions outside the five-line system",
                          {"block_nullity": len(block_null), "kdp_nullity": kdp_null,
                           "violated_lines": violated, "witness_residuals": [str(r) for r in residuals]},
                          residuals=["0"] if ok else ["no witness found"]))
    return out
