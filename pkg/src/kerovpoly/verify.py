"""Verification suites tying the character polynomials to independent checks.

Each suite scans its whole range, collects every mismatch and returns a
:class:`VerifyReport`; nothing aborts on the first failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from . import engine
from .exact import Poly
from .oracle import count_cycle_products, free_cumulants, normalized_character, profile
from .symfun import partitions_of

DEFAULT_MAX_N = 8
DEFAULT_MAX_K_CROSS = 12
DEFAULT_MAX_K_POSITIVITY = 16


@dataclass
class VerifyReport:
    suite: str
    parameters: dict[str, Any]
    checked: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    timing: float = 0.0

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, inputs: dict[str, Any], expected, actual, ok: bool | None = None) -> None:
        self.checked += 1
        if ok is None:
            ok = expected == actual
        if not ok:
            self.counterexamples.append({"inputs": inputs, "expected": str(expected), "actual": str(actual)})

    def to_dict(self, *, include_timing: bool = False) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "parameters": self.parameters,
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
        }
        if include_timing:
            out["timing"] = round(self.timing, 3)
        return out


class _timed:
    def __init__(self, report: VerifyReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.timing = time.perf_counter() - self.start
        return False


def verify_character_identity(max_n: int = DEFAULT_MAX_N) -> VerifyReport:
    """``chi_hat_omega(k 1^{n-k}) == Sigma_k(R_2(omega), ...)`` for all ``omega |- n <= max_n``."""
    report = VerifyReport("characters", {"max_n": max_n})
    with _timed(report):
        totals = {k: engine.sigma_biane(k).total() for k in range(1, max_n + 1)}
        for n in range(1, max_n + 1):
            for omega in partitions_of(n):
                cumulants = free_cumulants(profile(omega), n + 1)
                values = {i + 1: r for i, r in enumerate(cumulants)}
                for k in range(1, n + 1):
                    report.record(
                        {"omega": list(omega), "k": k},
                        normalized_character(omega, k),
                        totals[k].evaluate(values),
                    )
    return report


def verify_cross_formulas(max_k: int = DEFAULT_MAX_K_CROSS) -> VerifyReport:
    """All four routes to ``Sigma_{k,2n}`` agree, and the R expansions are integral."""
    report = VerifyReport("cross", {"max_k": max_k})
    with _timed(report):
        for k in range(1, max_k + 1):
            biane = engine.sigma_biane(k)
            gen = engine.sigma_maingen(k)
            report.record({"k": k, "check": "leading"}, Poly.var("R", k + 1), biane.piece(0))
            total = biane.total()
            report.record({"k": k, "check": "integral"}, True, total.is_integral())
            for n in range(1, (k + 1) // 2 + 1):
                reference = engine.to_c_basis(biane.piece(2 * n))
                for route, value in (
                    ("main", engine.sigma_main(k, n)),
                    ("mainmod", engine.sigma_mainmod(k, n)),
                    ("maingen", gen.piece(2 * n)),
                ):
                    report.record({"k": k, "n": n, "route": route}, reference, value)
    return report


def verify_closed_forms(max_k: int = 15, max_k_cycles: int = 8) -> VerifyReport:
    """Closed forms for ``Sigma_{k,2}``, ``Sigma_{k,4}``, pure powers, and linear terms."""
    report = VerifyReport("closed", {"max_k": max_k, "max_k_cycles": max_k_cycles})
    with _timed(report):
        for k in range(1, max_k + 1):
            report.record({"k": k, "form": "sigma_k2"}, engine.sigma_k2_closed(k), engine.sigma_main(k, 1))
        for k in range(3, max_k + 1):
            direct = engine.sigma_main(k, 2)
            report.record({"k": k, "form": "sigma_k4_sum"}, engine.sigma_k4_closed(k), direct)
            report.record({"k": k, "form": "sigma_k4_series"}, engine.sigma_k4_series(k), direct)
        for m in range(2, max_k):
            for i in range(1, max_k):
                k = m * i + 3
                if k > max_k:
                    break
                direct = engine.r_power_coeff(engine.to_r_basis(engine.sigma_main(k, 2)), m, i)
                report.record({"m": m, "i": i, "form": "pure_power"}, engine.pure_power_coeff(m, i), direct)
                if m == 2:
                    report.record({"i": i, "form": "stanley"}, engine.stanley_value(i), direct)
        for k in range(1, max_k_cycles + 1):
            for n in range(1, (k + 1) // 2 + 1):
                report.record(
                    {"k": k, "n": n, "form": "linear"},
                    count_cycle_products(k, n),
                    engine.linear_coefficient(k, n),
                )
    return report


def verify_positivity(max_k: int = DEFAULT_MAX_K_POSITIVITY, basis: str = "C", grade: int | None = None) -> VerifyReport:
    """Every nonzero coefficient of every graded piece is positive.

    In the R basis the whole of ``Sigma_k`` is scanned; in the C basis the
    pieces with ``2n >= 2`` (``Sigma_{k,0} = R_{k+1}`` is not C-positive).
    """
    if basis not in ("R", "C"):
        raise ValueError(f"unknown basis {basis!r}")
    params: dict[str, Any] = {"max_k": max_k, "basis": basis}
    if grade is not None:
        params["grade"] = grade
    report = VerifyReport("positivity", params)
    with _timed(report):
        for k in range(1, max_k + 1):
            res = engine.sigma(k, basis)
            grades = res.grades() if basis == "R" else [g for g in res.grades() if g > 0]
            if grade is not None:
                grades = [g for g in grades if g == grade]
            for g in grades:
                for m, c in res.piece(g).items():
                    report.record({"k": k, "grade": g, "monomial": [list(f) for f in m]}, "> 0", c, ok=c > 0)
    return report


SUITES = {
    "characters": verify_character_identity,
    "cross": verify_cross_formulas,
    "closed": verify_closed_forms,
    "positivity": verify_positivity,
}
