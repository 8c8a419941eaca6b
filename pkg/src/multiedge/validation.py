"""Confronting the asymptotic evaluators with exact counts.

Every ``validate_*`` function returns a :class:`ValidationReport`. Rows store
only the exact and asymptotic values; absolute and relative errors are
recomputed from those on access. Each report carries the tolerance it was
judged against and a short rationale for that tolerance.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import asymptotics as asy
from .counting import (
    a_n,
    count_vertices_eq,
    expected_height_exact,
    height_table,
    vertex_moments_exact,
)
from .trees import iter_dary

__all__ = [
    "ValidationRow",
    "ValidationReport",
    "non_increasing",
    "CLAIMS",
    "run_claim",
]

#: Values listed for the first ten multi-edge tree counts.
LISTED_SEQUENCE = (1, 1, 3, 10, 36, 137, 543, 2219, 9285, 39587)


@dataclass(frozen=True)
class ValidationRow:
    n: int
    quantity: str
    exact: float
    asymptotic: float

    @property
    def abs_error(self) -> float:
        return abs(self.exact - self.asymptotic)

    @property
    def rel_error(self) -> float:
        return self.abs_error / abs(self.exact) if self.exact else math.inf

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "quantity": self.quantity,
            "exact": self.exact,
            "asymptotic": self.asymptotic,
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
        }


@dataclass
class ValidationReport:
    claim: str
    rows: list[ValidationRow]
    passed: bool
    tolerance: str
    rationale: str
    metrics: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "rationale": self.rationale,
            "metrics": self.metrics,
            "rows": [r.to_dict() for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "n", "quantity", "exact", "asymptotic", "abs_error", "rel_error", "verdict"])
        for r in self.rows:
            w.writerow([self.claim, r.n, r.quantity, repr(r.exact), repr(r.asymptotic),
                        repr(r.abs_error), repr(r.rel_error), self.verdict])
        return buf.getvalue()


def non_increasing(values) -> bool:
    """True when no value exceeds its predecessor (up to float rounding)."""
    vals = list(values)
    return all(b <= a * (1 + 1e-12) + 1e-15 for a, b in zip(vals, vals[1:]))


# -- claims ----------------------------------------------------------------


def validate_sequence(n_max: int = 9) -> ValidationReport:
    rows = [ValidationRow(n, "A_n", float(a_n(n)), float(LISTED_SEQUENCE[n]))
            for n in range(min(n_max, 9) + 1)]
    ok = all(a_n(n) == LISTED_SEQUENCE[n] for n in range(min(n_max, 9) + 1))
    return ValidationReport("sequence", rows, ok, "exact equality",
                            "integer sequence; no asymptotics involved")


def validate_expected_height(grid=(100, 200, 400)) -> ValidationReport:
    rows = [ValidationRow(n, "E(H_n)", float(expected_height_exact(n)), asy.expected_height_asym(n))
            for n in grid]
    scaled = [r.abs_error * math.sqrt(r.n) for r in rows]
    ok = non_increasing(scaled)
    return ValidationReport(
        "expected-height", rows, ok,
        "sqrt(n)*|error| non-increasing across the grid",
        "the remainder is O(1/sqrt n) with unknown constant, so the check is a trend",
        {"scaled_errors": scaled, "bound": max(scaled)},
    )


def validate_poisson_duality(alphas=(0.5, 1.0, 1.5, 2.0, 3.0), tol: float = 1e-12) -> ValidationReport:
    rows = [ValidationRow(0, f"G({a})", asy.g_alpha(a, "primal"), asy.g_alpha(a, "dual")) for a in alphas]
    ok = all(r.abs_error <= tol for r in rows)
    return ValidationReport(
        "poisson-duality", rows, ok, f"absolute difference <= {tol:g}",
        "an identity; G is O(1) at most, and the primal sum cancels to ~1e-16 absolute at small alpha",
        {"alphas": list(alphas)},
    )


def _height_distribution(n: int):
    table = height_table(n, "formula")
    total = a_n(n)
    return {h: table.count_eq(h) / total for h in range(1, n + 1)}


def validate_height_llt(n: int = 500, tol: float = 0.05, mass_tol: float = 0.01) -> ValidationReport:
    P = _height_distribution(n)
    mode = max(P, key=P.get)
    mean = sum(h * p for h, p in P.items())
    sd = math.sqrt(sum(h * h * p for h, p in P.items()) - mean * mean)
    window = [h for h in P if abs(h - mode) <= sd]
    rows = [ValidationRow(n, f"P(H={h})", P[h], asy.llt_density_multi(n, h)) for h in window]
    mass = sum(asy.llt_density_multi(n, h) for h in range(1, n + 1))
    worst = max(r.rel_error for r in rows)
    ok = worst < tol and abs(mass - 1.0) <= mass_tol
    return ValidationReport(
        "height-llt", rows, ok,
        f"relative error < {tol:g} for |h - mode| <= sd; total mass within {mass_tol:g} of 1",
        "local limit error term has unknown constants; window is one standard deviation of the exact law",
        {"mode": mode, "mean": mean, "sd": sd, "worst_rel_error": worst, "mass": mass},
    )


def validate_vertex_moments(n: int = 100, mean_tol: float = 0.05, var_tol: float = 0.1) -> ValidationReport:
    mean, var = vertex_moments_exact(n)
    rows = [ValidationRow(n, "E(V_n)", float(mean), asy.vertex_mean_asym(n)),
            ValidationRow(n, "Var(V_n)", float(var), asy.vertex_variance_asym(n))]
    ok = rows[0].abs_error < mean_tol and rows[1].abs_error < var_tol
    return ValidationReport("vertex-moments", rows, ok,
                            f"|mean error| < {mean_tol:g}, |variance error| < {var_tol:g}",
                            "remainders are O(1/n)")


def validate_vertex_mean_trend(grid=(50, 100, 200, 400)) -> ValidationReport:
    rows = [ValidationRow(n, "E(V_n)", float(vertex_moments_exact(n)[0]), asy.vertex_mean_asym(n)) for n in grid]
    errs = [r.abs_error for r in rows]
    ok = all(b < a for a, b in zip(errs, errs[1:]))
    return ValidationReport("vertex-mean-trend", rows, ok, "error strictly decreases along the grid",
                            "O(1/n) remainder restated as a trend")


def validate_vertex_llt(n: int = 500, tol: float = 0.02) -> ValidationReport:
    k = round(0.8 * n)
    rows = [ValidationRow(n, f"P(V={k})", count_vertices_eq(n, k) / a_n(n), asy.vertex_llt(n, k))]
    ok = rows[0].rel_error < tol
    return ValidationReport("vertex-llt", rows, ok, f"relative error < {tol:g}", "evaluated at the centre k = 4n/5")


def validate_a_n(grid=(50, 100, 200, 400)) -> ValidationReport:
    rows = [ValidationRow(n, "A_n/asym", asy.a_n_ratio(a_n(n), n), 1.0) for n in grid]
    errs = [r.abs_error for r in rows]
    ok = all(b < a for a, b in zip(errs, errs[1:]))
    return ValidationReport("a-n", rows, ok, "|ratio - 1| strictly decreases along the grid",
                            "O(1/n) remainder restated as a trend", {"ratios": [r.exact for r in rows]})


def validate_conformal(points: int = 100, radius: float = 0.9, seed: int = 2016,
                       tol: float = 1e-12) -> ValidationReport:
    rng = np.random.default_rng(seed)
    rs = radius * np.sqrt(rng.random(points))
    th = 2 * np.pi * rng.random(points)
    us = rs * np.exp(1j * th)
    worst = float(max(abs(asy.upsilon(asy.zeta(u)) - u) for u in us))
    coeffs = asy.maclaurin_coefficients(asy.upsilon, 7)
    rows = [ValidationRow(n, f"[z^{n}]upsilon", float(a_n(n)), float(coeffs[n])) for n in range(1, 7)]
    ok = worst <= tol and all(round(r.asymptotic) == r.exact and r.abs_error < 1e-6 for r in rows)
    return ValidationReport("conformal", rows, ok,
                            f"|upsilon(zeta(u)) - u| <= {tol:g}; Taylor coefficients round to A_n",
                            "inverse maps are exact identities",
                            {"worst_inverse_error": worst, "points": points})


def validate_dary_height(d: int = 2, n: int = 12, tol: float = 0.15) -> ValidationReport:
    heights = [t.height for t in iter_dary(d, n, ceiling=n)]
    mean = sum(heights) / len(heights)
    rows = [ValidationRow(n, "E(height)", mean, asy.avg_height_dary(d, n))]
    ok = rows[0].rel_error < tol
    return ValidationReport("dary-height", rows, ok, f"relative error < {tol:g}",
                            "small-n sanity bound on the leading term",
                            {"d": d, "trees": len(heights)})


CLAIMS = {
    "sequence": validate_sequence,
    "expected-height": validate_expected_height,
    "poisson-duality": validate_poisson_duality,
    "height-llt": validate_height_llt,
    "vertex-moments": validate_vertex_moments,
    "vertex-mean-trend": validate_vertex_mean_trend,
    "vertex-llt": validate_vertex_llt,
    "a-n": validate_a_n,
    "conformal": validate_conformal,
    "dary-height": validate_dary_height,
}

_GRID_CLAIMS = {"expected-height", "vertex-mean-trend", "a-n"}
_N_CLAIMS = {"height-llt", "vertex-moments", "vertex-llt", "dary-height"}


def run_claim(name: str, grid=None, n: int | None = None) -> ValidationReport:
    """Run one named claim, optionally overriding its grid or size."""
    try:
        fn = CLAIMS[name]
    except KeyError:
        raise ValueError(f"unknown claim {name!r}; choose from {sorted(CLAIMS)}") from None
    kwargs = {}
    if grid is not None:
        if name not in _GRID_CLAIMS:
            raise ValueError(f"claim {name!r} takes no grid")
        kwargs["grid"] = tuple(grid)
    if n is not None:
        if name not in _N_CLAIMS:
            raise ValueError(f"claim {name!r} takes no size")
        kwargs["n"] = n
    return fn(**kwargs)
