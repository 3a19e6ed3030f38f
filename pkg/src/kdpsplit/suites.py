"""Suite registry and the report object emitted by the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from . import __version__
from .checks import FAIL, NOT_APPLICABLE, PASS, CheckResult, not_applicable, timed
from .representations import (
    RHO_FAMILIES, build, build_beta, build_hagen_hurley, build_rho, verify_gamma,
    verify_kdp_algebra, verify_no_similarity, verify_tzou,
)


def _informational(check: CheckResult) -> CheckResult:
    check.detail["informational"] = True
    if check.status == FAIL:
        return not_applicable(check.id, "informational check; a failure does not gate the suite", check.anchor,
                              check.residuals)
    return check


def algebra_checks() -> list[CheckResult]:
    out = []
    for spin in (0, 1):
        out.append(verify_kdp_algebra(build_beta(spin)))
    for family in RHO_FAMILIES:
        out.append(verify_tzou(build_rho(family)))
    for chirality in ("undotted-eta", "dotted-chi"):
        out.append(verify_tzou(build_hagen_hurley(chirality)))
    for spin in (0, 1):
        out.append(_informational(verify_tzou(build_beta(spin))))
    for a, b in (("s0", "s0-tilde"), ("s1-eta", "s1-eta-tilde"), ("s1-chi", "s1-chi-tilde")):
        out.append(verify_no_similarity(build_rho(a), build_rho(b)))
    out.append(verify_no_similarity(build_rho("s0"), build_rho("s0"), expect_similar=True))
    out.extend(verify_gamma())
    return out


def spinor_checks() -> list[CheckResult]:
    from .spinor_calculus import verify_spinor_calculus, verify_spinor_identities
    return verify_spinor_identities() + verify_spinor_calculus()


def spin0_checks() -> list[CheckResult]:
    from . import split_spin0 as s0
    out = s0.verify_spinor_form0()
    for half in s0.HALVES:
        out.append(s0.verify_constituent_mass(half))
        out.extend(s0.verify_identity0(half))
    out.extend(s0.verify_matrix_forms0())
    out.extend(s0.verify_constituents_imply_kdp0())
    out.extend(s0.verify_reverse_inclusion0())
    return out


def spin1_checks() -> list[CheckResult]:
    from . import split_spin1 as s1
    out = s1.verify_spinor_tensor_equivalence_spin1()
    for ch in s1.CHIRALITIES:
        out.append(s1.verify_hh_expansion(ch))
        out.extend(s1.verify_spin1_condition(ch))
        out.extend(s1.verify_split_equivalence1(ch))
    out.extend(s1.verify_hh_implies_kdp1())
    for kind in ("hat", "check"):
        out.extend(s1.verify_transform_roundtrip(kind))
    out.extend(s1.verify_matrix_forms1())
    out.extend(s1.verify_hh_matrix_forms())
    return out


def dirac_checks() -> list[CheckResult]:
    from .dirac_subsolutions import verify_dirac
    return verify_dirac()


def covariance_checks() -> list[CheckResult]:
    from .covariance import verify_covariance
    return verify_covariance()


def planewave_checks() -> list[CheckResult]:
    from .planewave import verify_planewave
    return verify_planewave()


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "algebra": algebra_checks,
    "spinor": spinor_checks,
    "spin0": spin0_checks,
    "spin1": spin1_checks,
    "dirac": dirac_checks,
    "covariance": covariance_checks,
    "planewave": planewave_checks,
}
SUITE_NAMES = ("all",) + tuple(SUITES)


def perturbed_checks(name: str, mu: int = 0, row: int = 0, col: int = 0) -> list[CheckResult]:
    """Re-run the defining algebra on a copy of ``name`` with one entry shifted by 1.

    Always expected to fail; it guards against verifiers that pass vacuously.
    """
    rep = build(name).perturbed(mu, row, col)
    verify = verify_kdp_algebra if name.startswith("beta-") else verify_tzou
    return [verify(rep, f"perturbed.{name}.mu{mu}.{row}-{col}")]


@dataclass
class Report:
    suite: str
    checks: list[CheckResult]
    version: str = __version__

    def __post_init__(self):
        self.checks = sorted(self.checks, key=lambda c: c.id)
        ids = [c.id for c in self.checks]
        dup = sorted({i for i in ids if ids.count(i) > 1})
        if dup:
            raise ValueError(f"duplicate check ids: {', '.join(dup)}")

    @property
    def summary(self) -> dict:
        count = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0}
        for c in self.checks:
            count[c.status] += 1
        return {"pass": count[PASS], "fail": count[FAIL], "na": count[NOT_APPLICABLE]}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self, timings: bool = False) -> dict:
        return {"version": self.version, "suite": self.suite,
                "checks": [c.to_dict(timings) for c in self.checks], "summary": self.summary}

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self, timings: bool = False) -> str:
        tag = {PASS: "PASS", FAIL: "FAIL", NOT_APPLICABLE: "N/A "}
        lines = [f"kdpsplit {self.version}  suite: {self.suite}"]
        for c in self.checks:
            line = f"{tag[c.status]}  {c.id}"
            if timings:
                line += f"  ({c.elapsed_ms:.1f} ms)"
            lines.append(line)
            if c.status != PASS:
                lines.extend(f"        residual: {r}" for r in c.residuals[:8])
                if len(c.residuals) > 8:
                    lines.append(f"        ... {len(c.residuals) - 8} more")
                reason = c.detail.get("reason")
                if reason:
                    lines.append(f"        reason: {reason}")
        s = self.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['na']} not applicable")
        return "\n".join(lines) + "\n"


def run_suite(name: str, perturb: str | None = None) -> Report:
    if name not in SUITE_NAMES:
        raise KeyError(name)
    names = list(SUITES) if name == "all" else [name]
    checks: list[CheckResult] = []
    for n in names:
        with timed(checks):
            checks.extend(SUITES[n]())
    if perturb is not None:
        with timed(checks):
            checks.extend(perturbed_checks(perturb))
    return Report(name, checks)

