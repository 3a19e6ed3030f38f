"""Two-component spinor calculus.

Index conventions
-----------------
Spinor indices take the values 1 and 2 (dotted indices are written ``1'``
and ``2'`` in printed names).  The metric spinor is
``eps = ((0, 1), (-1, 0))`` for every index type and position, and

* lowering:  ``x_A = x^B eps_BA``   (so ``x_1 = -x^2``, ``x_2 = x^1``)
* raising:   ``x^A = eps^AB x_B``

Both index types use the same rule.  With it ``p_A^B' p^C_B' = -delta p.p``
and the other quadratic identities of the momentum spinor come out with the
signs used throughout this package; mixing rules between undotted and dotted
indices would flip them.

The Levi-Civita symbol is normalised by ``eps_0123 = +1`` and the dual of an
antisymmetric tensor is ``Fhat_mn = (i/2) eps_mnkl F^kl``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass
from typing import Mapping, Sequence

from .checks import CheckResult, zero_check
from .exact import I, Poly
from .symbols import METRIC, P, P_SQUARED, const

UNDOTTED = "undotted"
DOTTED = "dotted"
UP = "up"
DOWN = "down"

EPSILON = ((0, 1), (-1, 0))
HALF = Fraction(1, 2)


def _eps(a: int, b: int) -> int:
    return EPSILON[a - 1][b - 1]


@dataclass(frozen=True, eq=False)
class Spinor:
    """Components of a spinor with typed index slots.

    ``slots`` lists ``(chirality, position)`` per index; ``comps`` maps index
    tuples (values 1 or 2) to polynomials.
    """

    slots: tuple[tuple[str, str], ...]
    comps: Mapping[tuple[int, ...], Poly]

    @classmethod
    def build(cls, slots, fn) -> "Spinor":
        slots = tuple(slots)
        comps = {idx: fn(*idx) for idx in itertools.product((1, 2), repeat=len(slots))}
        return cls(slots, comps)

    def __getitem__(self, idx) -> Poly:
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self.comps[idx]

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return self.slots == other.slots and all(self.comps[k] == other.comps[k] for k in self.comps)

    def __add__(self, other: "Spinor") -> "Spinor":
        if self.slots != other.slots:
            raise ValueError(f"cannot add spinors with slots {self.slots} and {other.slots}")
        return Spinor(self.slots, {k: v + other.comps[k] for k, v in self.comps.items()})

    def __sub__(self, other: "Spinor") -> "Spinor":
        return self + other.scale(-1)

    def scale(self, c) -> "Spinor":
        return Spinor(self.slots, {k: v * c for k, v in self.comps.items()})

    def map(self, fn) -> "Spinor":
        return Spinor(self.slots, {k: fn(v) for k, v in self.comps.items()})

    def _move(self, k: int, direction: str) -> "Spinor":
        chir, pos = self.slots[k]
        if direction == DOWN and pos != UP or direction == UP and pos != DOWN:
            raise ValueError(f"index {k} is already {pos}")
        slots = self.slots[:k] + ((chir, direction),) + self.slots[k + 1:]
        comps = {}
        for idx in self.comps:
            a = idx[k]
            total = const(0)
            for b in (1, 2):
                src = idx[:k] + (b,) + idx[k + 1:]
                e = _eps(b, a) if direction == DOWN else _eps(a, b)
                if e:
                    total = total + e * self.comps[src]
            comps[idx] = total
        return Spinor(slots, comps)

    def lower(self, k: int) -> "Spinor":
        return self._move(k, DOWN)

    def raise_(self, k: int) -> "Spinor":
        return self._move(k, UP)

    def with_positions(self, positions: Sequence[str]) -> "Spinor":
        out = self
        for k, want in enumerate(positions):
            if out.slots[k][1] != want:
                out = out._move(k, want)
        return out

    def all_up(self) -> "Spinor":
        return self.with_positions([UP] * len(self.slots))

    def all_down(self) -> "Spinor":
        return self.with_positions([DOWN] * len(self.slots))

    def contract(self, other: "Spinor", i: int, j: int) -> "Spinor":
        """Sum over index ``i`` of self against index ``j`` of other."""
        ci, pi = self.slots[i]
        cj, pj = other.slots[j]
        if ci != cj:
            raise ValueError("cannot contract an undotted index with a dotted one")
        if pi == pj:
            raise ValueError("contraction needs one upper and one lower index")
        slots = self.slots[:i] + self.slots[i + 1:] + other.slots[:j] + other.slots[j + 1:]
        comps = {}
        for left in itertools.product((1, 2), repeat=len(self.slots) - 1):
            for right in itertools.product((1, 2), repeat=len(other.slots) - 1):
                total = const(0)
                for s in (1, 2):
                    a = self.comps[left[:i] + (s,) + left[i:]]
                    b = other.comps[right[:j] + (s,) + right[j:]]
                    if a and b:
                        total = total + a * b
                comps[left + right] = total
        return Spinor(slots, comps)

    def scalar(self) -> Poly:
        if self.slots:
            raise ValueError("spinor still carries free indices")
        return self.comps[()]


def scalar_product(xi: Spinor, zeta: Spinor) -> Poly:
    """``xi_A zeta^A`` for one-index spinors given in any position."""
    return xi.with_positions([DOWN]).contract(zeta.with_positions([UP]), 0, 0).scalar()


# -- four-vectors -----------------------------------------------------------


def vector_to_spinor(v: Sequence[Poly]) -> Spinor:
    """``zeta^{AB'} = (sigma^0 v^0 + sigma.v)^{AB'}``."""
    v0, v1, v2, v3 = v
    comps = {
        (1, 1): v0 + v3,
        (1, 2): v1 - I * v2,
        (2, 1): v1 + I * v2,
        (2, 2): v0 - v3,
    }
    return Spinor(((UNDOTTED, UP), (DOTTED, UP)), comps)


def spinor_to_vector(z: Spinor) -> list[Poly]:
    if [c for c, _ in z.slots] != [UNDOTTED, DOTTED]:
        raise ValueError("expected a spinor with one undotted and one dotted index")
    z = z.all_up()
    z11, z12, z21, z22 = z[1, 1], z[1, 2], z[2, 1], z[2, 2]
    return [
        (z11 + z22) * HALF,
        (z12 + z21) * HALF,
        (z12 - z21) * (I / 2),
        (z11 - z22) * HALF,
    ]


def lower_vector(v: Sequence[Poly]) -> list[Poly]:
    return [METRIC[mu] * v[mu] for mu in range(4)]


# momentum spinor in its four index placements
P_UU = vector_to_spinor(P)
P_DU = P_UU.lower(0)
P_UD = P_UU.lower(1)
P_DD = P_DU.lower(1)

_P_BY_PATTERN = {("^", "^"): P_UU, ("_", "^"): P_DU, ("^", "_"): P_UD, ("_", "_"): P_DD}


def pm(pattern: str) -> Poly:
    """Momentum spinor component from a compact index pattern.

    ``"_1^2"`` is ``p_1^{2'}``: the first index is undotted, the second
    dotted, each preceded by its position marker.
    """
    if len(pattern) != 4 or pattern[0] not in "^_" or pattern[2] not in "^_":
        raise ValueError(f"bad momentum index pattern {pattern!r}")
    a, b = int(pattern[1]), int(pattern[3])
    return _P_BY_PATTERN[(pattern[0], pattern[2])][a, b]


# -- antisymmetric tensors --------------------------------------------------

PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))


def levi_civita(*idx: int) -> int:
    """``eps_{abcd}`` with ``eps_0123 = +1``."""
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    seq = list(idx)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class AntisymTensor:
    """Six independent components ``F_01, F_02, F_03, F_23, F_31, F_12``."""

    comps: tuple[Poly, Poly, Poly, Poly, Poly, Poly]
    position: str = DOWN

    @classmethod
    def of(cls, *values, position: str = DOWN) -> "AntisymTensor":
        if len(values) == 1:
            values = tuple(values[0])
        return cls(tuple(v if isinstance(v, Poly) else const(v) for v in values), position)

    def __getitem__(self, mn: tuple[int, int]) -> Poly:
        mu, nu = mn
        if mu == nu:
            return const(0)
        if (mu, nu) in PAIRS:
            return self.comps[PAIRS.index((mu, nu))]
        return -self.comps[PAIRS.index((nu, mu))]

    def flip_position(self) -> "AntisymTensor":
        # F^{mn} = g^mm g^nn F_mn
        vals = tuple(METRIC[a] * METRIC[b] * c for (a, b), c in zip(PAIRS, self.comps))
        return AntisymTensor(vals, UP if self.position == DOWN else DOWN)

    def lowered(self) -> "AntisymTensor":
        return self if self.position == DOWN else self.flip_position()

    def raised(self) -> "AntisymTensor":
        return self if self.position == UP else self.flip_position()

    def __add__(self, other: "AntisymTensor") -> "AntisymTensor":
        o = other if other.position == self.position else other.flip_position()
        return AntisymTensor(tuple(a + b for a, b in zip(self.comps, o.comps)), self.position)

    def __sub__(self, other: "AntisymTensor") -> "AntisymTensor":
        return self + other.scale(-1)

    def scale(self, c) -> "AntisymTensor":
        return AntisymTensor(tuple(a * c for a in self.comps), self.position)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)


def dual(f: AntisymTensor) -> AntisymTensor:
    """``Fhat_mn = (i/2) eps_mnkl F^kl`` by explicit summation over all indices."""
    up = f.raised()
    vals = []
    for mu, nu in PAIRS:
        total = const(0)
        for k in range(4):
            for l in range(4):
                e = levi_civita(mu, nu, k, l)
                if e:
                    total = total + e * up[k, l]
        vals.append(total * (I / 2))
    out = AntisymTensor(tuple(vals), DOWN)
    return out if f.position == DOWN else out.raised()


def decompose(f: AntisymTensor) -> tuple[AntisymTensor, AntisymTensor]:
    """Selfdual and antiselfdual parts ``(F + Fhat)/2`` and ``(F - Fhat)/2``."""
    fd = dual(f)
    return (f + fd).scale(HALF), (f - fd).scale(HALF)


@dataclass(frozen=True)
class SymSpinor:
    """Symmetric two-index spinor ``(x11, x12, x22)`` of one chirality."""

    x11: Poly
    x12: Poly
    x22: Poly
    chirality: str = UNDOTTED
    position: str = UP

    def spinor(self) -> Spinor:
        vals = {(1, 1): self.x11, (1, 2): self.x12, (2, 1): self.x12, (2, 2): self.x22}
        return Spinor(((self.chirality, self.position),) * 2, vals)

    def raised(self) -> "SymSpinor":
        s = self.spinor().all_up()
        return SymSpinor(s[1, 1], s[1, 2], s[2, 2], self.chirality, UP)

    def lowered(self) -> "SymSpinor":
        s = self.spinor().all_down()
        return SymSpinor(s[1, 1], s[1, 2], s[2, 2], self.chirality, DOWN)


def tensor_from_symspinor(x: SymSpinor, part: str) -> AntisymTensor:
    """Selfdual tensor from an undotted spinor, antiselfdual from a dotted one.

    ``part`` names the expected result ("selfdual" or "antiselfdual") and must
    agree with the chirality of ``x``.
    """
    expected = {"selfdual": UNDOTTED, "antiselfdual": DOTTED}[part]
    if x.chirality != expected:
        raise ValueError(f"a {x.chirality} spinor does not map to a {part} tensor")
    u = x.raised()
    sign = 1 if x.chirality == UNDOTTED else -1
    electric = (-u.x11 + u.x22, sign * I * (u.x11 + u.x22), 2 * u.x12)
    # selfdual: F_0j = i F_kl, antiselfdual: F_0j = -i F_kl
    magnetic = tuple(e * (-sign * I) for e in electric)
    return AntisymTensor(electric + magnetic, DOWN)


def symspinor_from_tensor(f: AntisymTensor, part: str) -> SymSpinor:
    """Inverse of :func:`tensor_from_symspinor` (reads the ``F_0j`` components)."""
    chir = {"selfdual": UNDOTTED, "antiselfdual": DOTTED}[part]
    sign = 1 if chir == UNDOTTED else -1
    f = f.lowered()
    f01, f02, f03 = f.comps[:3]
    # f02 = sign*i*(x11 + x22)  ->  x11 + x22 = -sign*i*f02
    s = f02 * (-sign * I)
    return SymSpinor((s - f01) * HALF, f03 * HALF, (s + f01) * HALF, chir, UP)


def selfdual_from_spinor(x: SymSpinor) -> AntisymTensor:
    return tensor_from_symspinor(x, "selfdual")


def antiselfdual_from_spinor(x: SymSpinor) -> AntisymTensor:
    return tensor_from_symspinor(x, "antiselfdual")


# -- identities -------------------------------------------------------------


def id1_residuals() -> list[Poly]:
    return [
        pm("_1_1") * pm("^1^1") + pm("_2_1") * pm("^2^1") - P_SQUARED,
        pm("_1_2") * pm("^1^2") + pm("_2_2") * pm("^2^2") - P_SQUARED,
    ]


def id2_residuals() -> tuple[list[Poly], list[Poly]]:
    """``p^C_B' p_A^B' + delta p.p`` and ``p_A^D' p^A_B' + delta p.p`` over all index pairs."""
    undotted = []
    for c in (1, 2):
        for a in (1, 2):
            s = sum((pm(f"^{c}_{b}") * pm(f"_{a}^{b}") for b in (1, 2)), const(0))
            undotted.append(s + (P_SQUARED if a == c else 0))
    dotted = []
    for d in (1, 2):
        for b in (1, 2):
            s = sum((pm(f"_{a}^{d}") * pm(f"^{a}_{b}") for a in (1, 2)), const(0))
            dotted.append(s + (P_SQUARED if b == d else 0))
    return undotted, dotted


def id3_residuals() -> list[Poly]:
    return [
        pm("_1^1") * pm("^2_1") + pm("_1^2") * pm("^2_2"),
        pm("_2^1") * pm("^1_1") + pm("_2^2") * pm("^1_2"),
    ]


def light_cone_identity_residual() -> Poly:
    """``(p0 - p3)(p0 + p3) + (-p1 + i p2)(p1 + i p2) - p.p``."""
    p0, p1, p2, p3 = P
    return (p0 - p3) * (p0 + p3) + (-p1 + I * p2) * (p1 + I * p2) - P_SQUARED


def generated_id2_residuals() -> list[Poly]:
    """The undotted id2 contraction done through :meth:`Spinor.contract`."""
    prod = P_UD.contract(P_DU, 1, 1)  # p^C_B' p_A^B' -> slots (C up, A down)
    out = []
    for c in (1, 2):
        for a in (1, 2):
            out.append(prod[c, a] + (P_SQUARED if a == c else 0))
    return out


def verify_spinor_identities() -> list[CheckResult]:
    undotted, dotted = id2_residuals()
    id1 = id1_residuals()
    id3 = id3_residuals()
    return [
        zero_check("spinor.id1.dotted-1", [id1[0]], "p_{11'}p^{11'} + p_{21'}p^{21'} = p_mu p^mu"),
        zero_check("spinor.id1.dotted-2", [id1[1]], "p_{12'}p^{12'} + p_{22'}p^{22'} = p_mu p^mu"),
        zero_check("spinor.id1.light-cone", [light_cone_identity_residual()],
                   "(p0-p3)(p0+p3) + (-p1+ip2)(p1+ip2) = p0^2-p1^2-p2^2-p3^2"),
        zero_check("spinor.id2.undotted", undotted, "p^C_B' p_A^B' = -delta^C_A p_mu p^mu"),
        zero_check("spinor.id2.undotted-contracted", generated_id2_residuals(),
                   "p^C_B' p_A^B' = -delta^C_A p_mu p^mu (index contraction)"),
        zero_check("spinor.id2.dotted", dotted, "p_A^D' p^A_B' = -delta^D'_B' p_mu p^mu"),
        zero_check("spinor.id3.a", [id3[0]], "p_1^{1'}p^2_{1'} + p_1^{2'}p^2_{2'} = 0"),
        zero_check("spinor.id3.b", [id3[1]], "p_2^{1'}p^1_{1'} + p_2^{2'}p^1_{2'} = 0"),
    ]


def verify_spinor_calculus() -> list[CheckResult]:
    """Round trips and duality properties on fully symbolic inputs."""
    from .symbols import field

    results = []
    v = [field(f"v^{{{mu}}}") for mu in range(4)]
    z = vector_to_spinor(v)
    results.append(zero_check("spinor.vector.round-trip",
                              [a - b for a, b in zip(spinor_to_vector(z), v)],
                              "zeta^{AB'} <-> psi^mu"))
    results.append(zero_check("spinor.metric.raise-lower",
                              [a - b for a, b in zip(z.all_down().all_up().comps.values(), z.comps.values())],
                              "eps raising undoes eps lowering"))
    xi = Spinor(((UNDOTTED, UP),), {(1,): field("xi^{1}"), (2,): field("xi^{2}")})
    ze = Spinor(((UNDOTTED, UP),), {(1,): field("zeta^{1}"), (2,): field("zeta^{2}")})
    lhs = xi.lower(0).contract(ze, 0, 0).scalar()
    rhs = xi.contract(ze.lower(0), 0, 0).scalar()
    results.append(zero_check("spinor.metric.antisymmetric-product", [lhs + rhs],
                              "xi_A zeta^A = -xi^A zeta_A"))
    results.append(zero_check("spinor.metric.self-product", [scalar_product(xi, xi)],
                              "xi_A xi^A = 0"))
    f = AntisymTensor.of(*(field(f"F_{{{a}{b}}}") for a, b in PAIRS))
    results.append(zero_check("spinor.dual.involution", list((dual(dual(f)) - f).comps),
                              "dual(dual(F)) = F"))
    sd, asd = decompose(f)
    results.append(zero_check("spinor.dual.decompose", list((sd + asd - f).comps) +
                              list((dual(sd) - sd).comps) + list((dual(asd) + asd).comps),
                              "F = F^S + F^A, dual(F^S) = F^S, dual(F^A) = -F^A"))
    xs = SymSpinor(field("xi^{11}"), field("xi^{12}"), field("xi^{22}"), UNDOTTED)
    xd = SymSpinor(field("eta^{1'1'}"), field("eta^{1'2'}"), field("eta^{2'2'}"), DOTTED)
    fs = selfdual_from_spinor(xs)
    fa = antiselfdual_from_spinor(xd)
    results.append(zero_check("spinor.selfdual.map", list((dual(fs) - fs).comps) + list((dual(fa) + fa).comps),
                              "F^S from xi^{AB} is selfdual, F^A from eta^{A'B'} antiselfdual"))
    back_s = symspinor_from_tensor(fs, "selfdual")
    back_a = symspinor_from_tensor(fa, "antiselfdual")
    results.append(zero_check("spinor.selfdual.round-trip",
                              [back_s.x11 - xs.x11, back_s.x12 - xs.x12, back_s.x22 - xs.x22,
                               back_a.x11 - xd.x11, back_a.x12 - xd.x12, back_a.x22 - xd.x22],
                              "symmetric spinor <-> (anti)selfdual tensor"))
    return results
