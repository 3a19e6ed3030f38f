"""Three-component constituent systems written as Dirac equations with one
pinned component, and the structure around them: complex and charge
conjugation, diagonal projectors, and minimal coupling.

A Dirac system here is ``(sum_mu s_mu gamma^mu p^mu) Psi = m Psi`` for a
sign pattern ``s``; the metric pattern ``(+,-,-,-)`` is ``gamma^mu p_mu``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .checks import CheckResult, bool_check, not_applicable, zero_check
from .exact import (
    I, Equation, EquationSystem, GaussianRational, Poly, PolyMatrix, commutator, determinant, equivalence_factor,
)
from .representations import build_gamma
from .spinor_calculus import pm
from .split_spin0 import DOTTED_1, DOTTED_2, PSI, build_constituent0
from .split_spin1 import build_constituent1
from .symbols import A, E, E_SYMBOL, INVERSE_MASS, M, M_INV, P, P_SQUARED, P_SYMBOLS, TABLE, const, field

EMBEDDINGS = ("spin0-dotted1", "spin0-dotted2", "spin1-eta-1", "spin1-eta-2", "spin1-chi-1", "spin1-chi-2")
EQ_A_SIGNS = (1, -1, -1, -1)
EQ_B_SIGNS = (1, -1, 1, 1)
# conj(gamma^mu) = CONJ_PATTERN[mu] * gamma^mu in the spinor representation
CONJ_PATTERN = (1, 1, -1, 1)
_FACTORS = (GaussianRational(1), GaussianRational(-1), I, -I)


@lru_cache(maxsize=1)
def gammas() -> tuple[PolyMatrix, ...]:
    rep = build_gamma()
    return (*rep.mu, rep.extras["gamma5"])


def dirac_operator(signs: Sequence[int], p: Sequence = P) -> PolyMatrix:
    g = gammas()
    out = PolyMatrix.zeros(TABLE, 4)
    for mu in range(4):
        out = out + g[mu] * (signs[mu] * p[mu])
    return out


def _identity4() -> PolyMatrix:
    return PolyMatrix.identity(TABLE, 4)


@dataclass(frozen=True)
class DiracSystem:
    which: str
    operator: PolyMatrix
    state: tuple[Poly, Poly, Poly, Poly]
    signs: tuple[int, int, int, int]
    row_factors: tuple = ()

    def residuals(self) -> list[Poly]:
        lhs = self.operator.apply(list(self.state))
        return [l - M * s for l, s in zip(lhs, self.state)]

    def system(self) -> EquationSystem:
        lhs = self.operator.apply(list(self.state))
        eqs = [Equation(l, M * s, f"row {i + 1}") for i, (l, s) in enumerate(zip(lhs, self.state))]
        unknowns = sorted({x for s in self.state for x in s.symbols()}, key=lambda s: s.id)
        return EquationSystem.of(eqs, unknowns)


@dataclass(frozen=True)
class _Source:
    lines: tuple[Poly, Poly, Poly]
    identity: Poly
    fields: tuple[Poly, Poly, Poly]   # two components carried by the first lines, then the scalar


def _source(which: str) -> _Source:
    if which in ("spin0-dotted1", "spin0-dotted2"):
        c = build_constituent0(DOTTED_1 if which.endswith("1") else DOTTED_2)
        fields = c.state
    elif which in EMBEDDINGS:
        c = build_constituent1(which[len("spin1-"):])
        fields = tuple(c.state)
    else:
        raise ValueError(f"unknown embedding {which!r}")
    return _Source(tuple(c.system.residuals()), c.identity_residual(), fields)


def _match(rows: Sequence[Poly], targets: Sequence[Poly]):
    factors = [equivalence_factor(r, t) for r, t in zip(rows, targets)]
    return None if any(k is None for k in factors) else factors


@lru_cache(maxsize=None)
def embedding_forms(which: str) -> tuple[DiracSystem, ...]:
    """Every Dirac form of a constituent system within the search space.

    Candidate state ``(f1 y_a, f2 y_b, x, 0)`` with phases ``f1, f2`` in
    ``{1, -1, i, -i}`` and either ordering of the two components; accepted
    when rows 1-3 are multiples of the constituent lines carrying
    ``m y_a``, ``m y_b``, ``m x`` and row 4 is a multiple of the identity.
    """
    src = _source(which)
    zero = const(0)
    found = []
    for order in ((0, 1), (1, 0)):
        targets = (src.lines[order[0]], src.lines[order[1]], src.lines[2], src.identity)
        for f1, f2 in itertools.product(_FACTORS, repeat=2):
            state = (f1 * src.fields[order[0]], f2 * src.fields[order[1]], src.fields[2], zero)
            for signs in itertools.product((1, -1), repeat=4):
                op = dirac_operator(signs)
                factors = _match([l - M * s for l, s in zip(op.apply(list(state)), state)], targets)
                if factors is not None:
                    found.append(DiracSystem(which, op, state, signs, tuple(factors)))
    if not found:
        raise RuntimeError(f"no Dirac form found for {which}")
    return tuple(found)


def build_dirac_embedding(which: str) -> DiracSystem:
    """Canonical form: ``s_0 = +1`` and as few non-unit phases as possible."""
    def key(d: DiracSystem):
        phases = [next(iter(d.state[i].terms.values())) for i in (0, 1)]
        return (d.signs[0] != 1, sum(ph != 1 for ph in phases), tuple(-x for x in d.signs))
    return min(embedding_forms(which), key=key)


def _printed(rows) -> PolyMatrix:
    return PolyMatrix(TABLE, [[x if isinstance(x, Poly) else const(x) for x in r] for r in rows])


p0, p1, p2, p3 = P
EQ_A_MATRIX = _printed([
    [0, 0, p0 + p3, p1 - I * p2],
    [0, 0, p1 + I * p2, p0 - p3],
    [p0 - p3, -p1 + I * p2, 0, 0],
    [-p1 - I * p2, p0 + p3, 0, 0],
])
EQ_B_MATRIX = _printed([
    [0, 0, p0 - p3, p1 + I * p2],
    [0, 0, p1 - I * p2, p0 + p3],
    [p0 + p3, -p1 - I * p2, 0, 0],
    [-p1 + I * p2, p0 - p3, 0, 0],
])
# printed with an overall factor (-1) in front
EQ_A_STAR_MATRIX = _printed([
    [0, 0, p0 + p3, p1 + I * p2],
    [0, 0, p1 - I * p2, p0 - p3],
    [p0 - p3, -p1 - I * p2, 0, 0],
    [-p1 + I * p2, p0 + p3, 0, 0],
])


def _entries(m: PolyMatrix) -> list[Poly]:
    return [e for row in m.entries for e in row]


def _embedding_checks(d: DiracSystem, src: _Source, prefix: str) -> list[CheckResult]:
    rows = d.residuals()
    targets = _targets(d, src)
    body = [r - k * t for r, k, t in zip(rows[:3], d.row_factors[:3], targets[:3])]
    ident = rows[3] - d.row_factors[3] * targets[3]
    detail = {"signs": list(d.signs), "state": [str(s) for s in d.state],
              "row_factors": [str(k) for k in d.row_factors]}
    return [
        zero_check(f"{prefix}.rows", body, "rows 1-3 of the Dirac form are the three constituent lines", detail),
        zero_check(f"{prefix}.identity", [ident], "row 4 with the fourth component pinned is the identity"),
    ]


def _targets(d: DiracSystem, src: _Source) -> list[Poly]:
    """Constituent lines in the row order used by ``d``."""
    out = []
    for s in d.state[:2]:
        for j in (0, 1):
            if equivalence_factor(s, src.fields[j]) is not None:
                out.append(src.lines[j])
                break
    return out + [src.lines[2], src.identity]


def verify_embedding(which: str) -> list[CheckResult]:
    d = build_dirac_embedding(which)
    src = _source(which)
    out = _embedding_checks(d, src, f"dirac.embedding.{which}")
    out[0].detail["equivalent_forms"] = len(embedding_forms(which))
    zero_state = [r.subs({x: 0 for x in src.fields}) for r in d.residuals()]
    out.append(zero_check(f"dirac.embedding.{which}.zero-state", zero_state, "zero state solves the Dirac form"))
    if which == "spin0-dotted1":
        rows = d.residuals()
        lit = _entries(d.operator - EQ_A_MATRIX) + [
            rows[0] - ((p0 + p3) * PSI - M * d.state[0]),
            rows[3] - ((-p1 - I * p2) * d.state[0] + (p0 + p3) * d.state[1]),
        ]
        out.append(zero_check("dirac.eq-a.literal", lit,
                              "printed 4x4 matrix acting on (psi^11', psi^21', psi, 0)",
                              {"signs": list(d.signs), "gamma_mu_p^mu": d.signs == EQ_A_SIGNS}))
    if which == "spin0-dotted2":
        lit = _entries(d.operator - EQ_B_MATRIX) + [int(d.signs != EQ_B_SIGNS)]
        out.append(zero_check("dirac.eq-b.literal", lit, "printed 4x4 matrix acting on (psi^22', psi^12', psi, 0)",
                              {"signs": list(d.signs)}))
    det = determinant(d.operator - _identity4() * M)
    out.append(zero_check(f"dirac.mass.{which}", [det - (P_SQUARED - M * M) ** 2],
                          "det(s_mu gamma^mu p^mu - m) = (p.p - m^2)^2"))
    return out


# -- conjugation -------------------------------------------------------------------


def conjugate_dirac(d: DiracSystem) -> DiracSystem:
    """Entrywise complex conjugate: ``p -> -p``, fields to their starred partners."""
    signs = tuple(-s * c for s, c in zip(d.signs, CONJ_PATTERN))
    return DiracSystem(d.which + "*", d.operator.conj(), tuple(s.conj() for s in d.state), signs)


def charge_partner_signs(signs: Sequence[int]) -> tuple[int, ...]:
    """Pattern of ``gamma^3 conj(O_s) (gamma^3)^-1``: sign of gamma^3 kept, others flipped."""
    conj = [-s * c for s, c in zip(signs, CONJ_PATTERN)]
    return tuple(-x for x in conj[:3]) + (conj[3],)


def charge_matrix() -> PolyMatrix:
    g = gammas()
    return g[3] * g[0]


def charge_conjugate(d: DiracSystem) -> tuple[DiracSystem, PolyMatrix]:
    """``gamma^3`` applied to the conjugate system; returns the partner and ``C = gamma^3 gamma^0``."""
    g3 = gammas()[3]
    conj = conjugate_dirac(d)
    t = charge_partner_signs(d.signs)
    state = tuple(g3.apply(list(conj.state)))
    return DiracSystem(d.which + "^c", dirac_operator(t), state, t), charge_matrix()


def _charge_identity(d: DiracSystem, partner: DiracSystem, conj_op: PolyMatrix | None = None) -> list[Poly]:
    g3 = gammas()[3]
    conj_op = d.operator.conj() if conj_op is None else conj_op
    return _entries(g3 * conj_op - partner.operator * g3)


def verify_conjugation() -> list[CheckResult]:
    d = build_dirac_embedding("spin0-dotted1")
    c = conjugate_dirac(d)
    twice = conjugate_dirac(c)
    pattern_res = _entries(c.operator - dirac_operator(c.signs))
    star = _entries(c.operator + EQ_A_STAR_MATRIX)
    printed = tuple(-s for s in c.signs)
    return [
        zero_check("dirac.conjugate.pattern", pattern_res, "conj(s_mu gamma^mu p^mu) = -(s'_mu gamma^mu p^mu)",
                   {"overall": -1, "signs": list(printed)}),
        zero_check("dirac.conjugate.eq-a-star", star + [int(printed != (1, -1, 1, -1))],
                   "(-1)(g0 p0 - g1 p1 + g2 p2 - g3 p3) Psi* = m Psi*"),
        zero_check("dirac.conjugate.involution",
                   _entries(twice.operator - d.operator) + [a - b for a, b in zip(twice.state, d.state)],
                   "conjugating twice returns the original system"),
        zero_check("dirac.conjugate.mass-real", [M.conj() - M], "m is unchanged by conjugation"),
    ]


def verify_charge_conjugation() -> list[CheckResult]:
    out = []
    g = gammas()
    for which in EMBEDDINGS:
        d = build_dirac_embedding(which)
        partner, _ = charge_conjugate(d)
        lhs = partner.residuals()
        rhs = gammas()[3].apply([r.conj() for r in d.residuals()])
        out.append(zero_check(f"dirac.charge.{which}.identity",
                              _charge_identity(d, partner) + [a - b for a, b in zip(lhs, rhs)],
                              "gamma^3 conj(O_s) = O_t gamma^3", {"signs": list(d.signs), "partner": list(partner.signs)}))
        out.append(zero_check(f"dirac.charge.{which}.twice",
                              [a - b for a, b in zip(charge_partner_signs(partner.signs), d.signs)],
                              "applying the construction twice restores the sign pattern"))
    c = charge_matrix()
    out.append(zero_check("dirac.charge.matrix", _entries(c * g[0] - g[3]), "C gamma^0 = gamma^3 with C = gamma^3 gamma^0"))
    pairs = charge_pairs()
    d1 = build_dirac_embedding("spin0-dotted1")
    b_ok = charge_partner_signs(d1.signs) == EQ_B_SIGNS and pairs.get("spin0-dotted1") == ["spin0-dotted2"]
    out.append(bool_check("dirac.charge.spin0.pair", b_ok, "partner of the dotted-1 form has the pattern of the dotted-2 form",
                          {"partner_signs": list(charge_partner_signs(d1.signs))}))
    spin1 = {k: v for k, v in pairs.items() if k.startswith("spin1")}
    ok = all(len(v) == 1 and pairs[v[0]] == [k] for k, v in spin1.items())
    out.append(bool_check("dirac.charge.spin1.pairs", ok, "each spin-1 Dirac form has exactly one charge-conjugate partner",
                          {"pairs": spin1}))
    return out


def charge_pairs() -> dict[str, list[str]]:
    """For each embedding, the same-spin embeddings admitting a form with the partner pattern."""
    patterns = {w: {d.signs for d in embedding_forms(w)} for w in EMBEDDINGS}
    out = {}
    for w in EMBEDDINGS:
        t = charge_partner_signs(build_dirac_embedding(w).signs)
        spin = w.split("-")[0]
        out[w] = [v for v in EMBEDDINGS if v.startswith(spin) and t in patterns[v]]
    return out


# -- projectors --------------------------------------------------------------------


@dataclass(frozen=True)
class Projector:
    k: int
    matrix: PolyMatrix
    gamma_formula: PolyMatrix | None = None


def build_projector(k: int) -> Projector:
    if k not in (1, 2, 3, 4):
        raise ValueError("projector index must be 1..4")
    diag = PolyMatrix.diag(TABLE, [0 if i == k - 1 else 1 for i in range(4)])
    return Projector(k, diag, p4_gamma_formula() if k == 4 else None)


def p4_gamma_formula() -> PolyMatrix:
    """``(3 + gamma^5 - gamma^0 gamma^3 + i gamma^1 gamma^2) / 4``."""
    g = gammas()
    total = _identity4() * 3 + g[4] - g[0] * g[3] + (g[1] * g[2]) * I
    return total * Fraction(1, 4)


def verify_projectors() -> list[CheckResult]:
    out = []
    p4 = build_projector(4)
    out.append(zero_check("dirac.projector.formula", _entries(p4.gamma_formula - p4.matrix),
                          "(3 + g5 - g0 g3 + i g1 g2)/4 = diag(1,1,1,0)"))
    idem = []
    for k in (1, 2, 3, 4):
        p = build_projector(k).matrix
        idem.extend(_entries(p * p - p))
    out.append(zero_check("dirac.projector.idempotent", idem, "P_k^2 = P_k for k = 1..4"))
    out.append(zero_check("dirac.projector.P1", _entries(build_projector(1).matrix - PolyMatrix.diag(TABLE, [0, 1, 1, 1])),
                          "P_1 = diag(0,1,1,1)"))
    return out


def verify_generator_commutation() -> list[CheckResult]:
    g = gammas()
    p4 = build_projector(4).matrix
    comm = {}
    for mu, nu in itertools.combinations(range(4), 2):
        comm[(mu, nu)] = commutator(p4, g[mu] * g[nu])
    commuting = [(0, 3), (1, 2)]
    zero = [e for key in commuting for e in _entries(comm[key])]
    others = {f"g{mu}g{nu}": comm[(mu, nu)].nnz() for mu, nu in comm if (mu, nu) not in commuting}
    return [
        zero_check("dirac.generators.commuting", zero, "[P_4, g0 g3] = [P_4, g1 g2] = 0"),
        bool_check("dirac.generators.noncommuting", all(n > 0 for n in others.values()),
                   "P_4 does not commute with the other four generators", {"nonzero_entries": others}),
    ]


def _free_state(d: DiracSystem) -> list[Poly]:
    return list(d.state[:3]) + [field("Psi_4")]


def project_decompose(d: DiracSystem, proj: Projector) -> tuple[EquationSystem, EquationSystem]:
    """``P O P Psi = m P Psi`` and ``(1 - P) O P Psi = 0`` with a free fourth component."""
    p = proj.matrix
    q = _identity4() - p
    psi = _free_state(d)
    p_psi = p.apply(psi)
    upper = (p * d.operator * p).apply(psi)
    lower = (q * d.operator * p).apply(psi)
    a = EquationSystem.of([Equation(l, M * s, f"projected row {i + 1}") for i, (l, s) in enumerate(zip(upper, p_psi))])
    b = EquationSystem.of([Equation(l, const(0), f"complement row {i + 1}") for i, l in enumerate(lower)])
    return a, b


def _decomposition_residuals(d: DiracSystem, src: _Source, proj: Projector) -> tuple[list[Poly], list[Poly]]:
    a, b = project_decompose(d, proj)
    targets = _targets(d, src)
    ra, rb = a.residuals(), b.residuals()
    upper = [ra[i] - d.row_factors[i] * targets[i] for i in range(3)] + [ra[3]]
    lower = rb[:3] + [rb[3] - d.row_factors[3] * targets[3]]
    return upper, lower


def verify_projection(which: str = "spin0-dotted1") -> list[CheckResult]:
    d = build_dirac_embedding(which)
    src = _source(which)
    upper, lower = _decomposition_residuals(d, src, build_projector(4))
    ident = Projector(0, _identity4())
    _, rest = project_decompose(d, ident)
    out = [
        zero_check(f"dirac.projection.{which}.upper", upper, "P_4 O P_4 Psi = m P_4 Psi is the constituent system"),
        zero_check(f"dirac.projection.{which}.lower", lower, "(1 - P_4) O P_4 Psi = 0 is the identity"),
        zero_check(f"dirac.projection.{which}.trivial", rest.residuals(), "P = 1 leaves no complement equations"),
    ]
    return out


def projector_survey(which: str = "spin0-dotted1") -> CheckResult:
    """P_1..P_3 applied to the same operator; none of them is paired with a system here."""
    d = build_dirac_embedding(which)
    counts = {}
    res = []
    for k in (1, 2, 3):
        proj = build_projector(k)
        a, b = project_decompose(d, proj)
        counts[f"P{k}"] = {"projected": sum(not r.is_zero() for r in a.residuals()),
                           "complement": sum(not r.is_zero() for r in b.residuals())}
        whole = (d.operator * proj.matrix).apply(_free_state(d))
        p_psi = proj.matrix.apply(_free_state(d))
        res.extend(x + y - (w - M * s) for x, y, w, s in zip(a.residuals(), b.residuals(), whole, p_psi))
    return zero_check(f"dirac.projector.survey.{which}", res, "projected plus complement rows give O P Psi = m P Psi",
                      {"nonzero_rows": counts})


# -- minimal coupling --------------------------------------------------------------


def coupling_map(e: Poly = E, potential: Sequence[Poly] = A) -> dict:
    return {P_SYMBOLS[mu]: P[mu] - e * potential[mu] for mu in range(4)}


def minimal_coupling(obj, e: Poly = E, potential: Sequence[Poly] = A):
    """Formal substitution ``p^mu -> p^mu - e A^mu`` (the shifted momenta commute)."""
    mapping = coupling_map(e, potential)
    if isinstance(obj, DiracSystem):
        return DiracSystem(obj.which, obj.operator.subs(mapping), obj.state, obj.signs, obj.row_factors)
    return obj.subs(mapping)


def _coupled_source(which: str) -> _Source:
    src = _source(which)
    return _Source(tuple(minimal_coupling(x) for x in src.lines), minimal_coupling(src.identity), src.fields)


def verify_minimal_coupling() -> list[CheckResult]:
    out = []
    for which in EMBEDDINGS:
        d = minimal_coupling(build_dirac_embedding(which))
        src = _coupled_source(which)
        out.extend(_embedding_checks(d, src, f"coupling.embedding.{which}"))
    d = minimal_coupling(build_dirac_embedding("spin0-dotted1"))
    upper, lower = _decomposition_residuals(d, _coupled_source("spin0-dotted1"), build_projector(4))
    out.append(zero_check("coupling.projection.spin0-dotted1", upper + lower,
                          "projected decomposition with p replaced by p - eA"))
    # conj(p - eA) = -(p + eA): the partner carries the opposite charge
    for which in EMBEDDINGS:
        free = build_dirac_embedding(which)
        coupled = minimal_coupling(free)
        partner, _ = charge_conjugate(free)
        flipped = minimal_coupling(partner, e=-E)
        out.append(zero_check(f"coupling.charge.{which}", _charge_identity(coupled, flipped, coupled.operator.conj()),
                              "gamma^3 conj(O_s(p - eA)) = O_t(p + eA) gamma^3"))
    back = []
    for which in EMBEDDINGS:
        free = build_dirac_embedding(which)
        back.extend(_entries(minimal_coupling(free).operator.subs({E_SYMBOL: 0}) - free.operator))
    out.append(zero_check("coupling.free-limit", back, "e = 0 restores the free operators"))
    for half in (DOTTED_1, DOTTED_2):
        out.append(coupled_mass_check(half))
    return out


def coupled_mass_check(half: str) -> CheckResult:
    """The mass-shell cancellation uses commuting momenta, so it is not asserted under coupling."""
    c = build_constituent0(half)
    h = c.dotted
    solved = {
        c.state[0]: M_INV * minimal_coupling(pm(f"^1^{h}")) * PSI,
        c.state[1]: M_INV * minimal_coupling(pm(f"^2^{h}")) * PSI,
    }
    third = minimal_coupling(c.system[2].residual).subs(solved)
    leftover = (M * third).reduce([INVERSE_MASS]) - (P_SQUARED * PSI - M * M * PSI)
    return not_applicable(f"coupling.mass.{half}", "not applicable under coupling: the cancellation needs commuting momenta",
                          "p_mu p^mu psi = m^2 psi from the three lines", [leftover])


def verify_dirac() -> list[CheckResult]:
    out = []
    for which in EMBEDDINGS:
        out.extend(verify_embedding(which))
    out.extend(verify_conjugation())
    out.extend(verify_charge_conjugation())
    out.extend(verify_projectors())
    out.extend(verify_generator_commutation())
    for which in EMBEDDINGS:
        out.extend(verify_projection(which))
    out.append(projector_survey())
    out.extend(verify_minimal_coupling())
    return out
