"""Floating-point evaluators for the asymptotic laws of multi-edge trees.

The conformal change of variables ``z = u / (u^2 + 3u + 1)`` maps the unit
disk (minus one point) onto the plane slit along ``[1/5, 1]``, and turns the
height-bounded generating functions into rational functions of ``u``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

__all__ = [
    "SQRT5",
    "U_POLE",
    "ConformalPoint",
    "conformal_point",
    "upsilon",
    "zeta",
    "t_value",
    "t_h_value",
    "t_h_value_alpha_beta",
    "maclaurin_coefficients",
    "expected_height_asym",
    "g_alpha",
    "llt_density_multi",
    "llt_density_dary",
    "avg_height_dary",
    "children_proportion",
    "vertex_mean_asym",
    "vertex_variance_asym",
    "vertex_normal_approx",
    "vertex_llt",
    "a_n_asym",
    "a_n_ratio",
]

SQRT5 = math.sqrt(5.0)
#: The root of ``u^2 + 3u + 1`` inside the unit disk, excluded from the domain.
U_POLE = (-3.0 + SQRT5) / 2.0


# -- conformal maps --------------------------------------------------------


def zeta(u: complex) -> complex:
    """``u / (u^2 + 3u + 1)`` on the punctured unit disk."""
    u = complex(u)
    if abs(u) >= 1.0:
        raise ValueError(f"zeta is used on the open unit disk, got |u| = {abs(u)}")
    den = u * u + 3.0 * u + 1.0
    # |den| ~ sqrt5 |u - pole|; a rounded pole gives |den| of a few ulps
    if abs(den) <= 1e-15:
        raise ValueError("u is the excluded pole (-3 + sqrt 5) / 2")
    return u / den


def upsilon(z: complex) -> complex:
    """Inverse of :func:`zeta`, defined off the real segment ``[1/5, 1]``.

    Evaluated as ``2z / (1 - 3z + sqrt(1-5z) sqrt(1-z))`` with principal
    square roots, which equals ``(1 - 3z - sqrt(1-5z) sqrt(1-z)) / (2z)`` and
    stays accurate near ``z = 0``.
    """
    z = complex(z)
    if z.imag == 0.0 and 0.2 <= z.real <= 1.0:
        raise ValueError(f"upsilon is undefined on the cut [1/5, 1], got z = {z}")
    s = cmath.sqrt(1.0 - 5.0 * z) * cmath.sqrt(1.0 - z)
    return 2.0 * z / (1.0 - 3.0 * z + s)


@dataclass(frozen=True)
class ConformalPoint:
    """A point ``u`` of the disk with its image ``z`` and the two roots
    ``alpha``, ``beta`` of ``Q^2 - (1 - z) Q + z (1 - z)``."""

    z: complex
    u: complex
    alpha: complex
    beta: complex


def conformal_point(u: complex) -> ConformalPoint:
    u = complex(u)
    z = zeta(u)
    den = u * u + 3.0 * u + 1.0
    return ConformalPoint(z=z, u=u, alpha=(u + 1.0) / den, beta=u * (u + 1.0) / den)


def t_value(z: complex) -> complex:
    """Generating function of all multi-edge trees, ``T = u + 1``."""
    return upsilon(z) + 1.0


def t_h_value(z: complex, h: int) -> complex:
    """Generating function of trees of height at most ``h``, via ``u``."""
    u = upsilon(z)
    return (u + 1.0) * (1.0 - u ** (h + 1)) / (1.0 - u ** (h + 2))


def t_h_value_alpha_beta(z: complex, h: int) -> complex:
    """Same as :func:`t_h_value`, written with the roots ``alpha``, ``beta``."""
    z = complex(z)
    s = cmath.sqrt(1.0 - 5.0 * z) * cmath.sqrt(1.0 - z)
    a = (1.0 - z + s) / 2.0
    b = (1.0 - z - s) / 2.0
    return (1.0 - z) * (a ** (h + 1) - b ** (h + 1)) / (a ** (h + 2) - b ** (h + 2))


def maclaurin_coefficients(f, n_terms: int, radius: float = 0.1, points: int = 256) -> np.ndarray:
    """Taylor coefficients of ``f`` at 0 by the trapezoidal Cauchy integral.

    ``radius`` must lie inside the disk of convergence of ``f``.
    """
    theta = 2.0 * np.pi * np.arange(points) / points
    zs = radius * np.exp(1j * theta)
    vals = np.array([f(z) for z in zs])
    coeffs = np.fft.fft(vals)[:n_terms] / points
    return (coeffs / radius ** np.arange(n_terms)).real


# -- height ----------------------------------------------------------------


def expected_height_asym(n: float) -> float:
    """``(2/sqrt 5) sqrt(pi n) - 3/2``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2.0 / SQRT5 * math.sqrt(math.pi * n) - 1.5


def _theta_sum(x: float) -> float:
    # sum_{m>=1} (2 x^2 m^2 - 3) m^2 exp(-x^2 m^2), stopped once past the peak
    # of m^4 exp(-x^2 m^2) and a term drops below 1e-16 of the running scale
    total = 0.0
    scale = 0.0
    peak = math.sqrt(2.0) / x
    m = 1
    while True:
        q = x * x * m * m
        term = (2.0 * q - 3.0) * m * m * math.exp(-q)
        total += term
        scale = max(scale, abs(term), abs(total))
        if m > peak and abs(term) <= 1e-16 * scale:
            return total
        m += 1


_SELF_DUAL = math.sqrt(math.pi)


def g_alpha(alpha: float, form: str = "auto") -> float:
    """The theta-type series ``G(alpha)`` governing the height distribution.

    ``form`` is ``"primal"`` (sum in ``exp(-alpha^2 m^2)``), ``"dual"`` (its
    Poisson-summation transform in ``exp(-(pi/alpha)^2 m^2)``) or ``"auto"``.
    The primal terms alternate in sign and cancel badly for small ``alpha``;
    ``"auto"`` therefore picks the dual form below the self-dual point
    ``alpha = sqrt(pi)``.
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    if form == "auto":
        form = "dual" if alpha < _SELF_DUAL else "primal"
    if form == "primal":
        return _theta_sum(alpha)
    if form == "dual":
        x = math.pi / alpha
        return math.pi**2.5 / alpha**5 * _theta_sum(x)
    raise ValueError(f"unknown form {form!r}")


def llt_density_multi(n: int, h: int) -> float:
    """Local-limit approximation of ``P(H_n = h)``: ``(5h/n) G(sqrt5 h / (2 sqrt n))``."""
    if n < 1 or h < 1:
        raise ValueError("n and h must be positive")
    return 5.0 * h / n * g_alpha(SQRT5 * h / (2.0 * math.sqrt(n)))


def llt_density_dary(d: int, n: int, h: int) -> float:
    """Local-limit approximation of the height distribution of d-ary trees
    with ``n`` vertices at height ``h``."""
    if d < 2 or n < 1 or h < 1:
        raise ValueError("need d >= 2, n >= 1, h >= 1")
    c = math.sqrt(2.0 * (d - 1) / d)
    beta = 2.0 * math.sqrt(n) / (c * h)
    return 2.0 * c / (beta * math.sqrt(n)) * g_alpha(1.0 / beta)


def avg_height_dary(d: int, n: float) -> float:
    """``sqrt(2 pi d n / (d - 1))``."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    return math.sqrt(2.0 * math.pi * d * n / (d - 1))


def children_proportion(d: int, r: int) -> float:
    """Limiting share of vertices with exactly ``r`` children in d-ary trees."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    return math.comb(d, r) * (d - 1) ** (d - r) / d**d


# -- vertices --------------------------------------------------------------


def vertex_mean_asym(n: float) -> float:
    return 0.8 * n + 0.9


def vertex_variance_asym(n: float) -> float:
    return 0.16 * n + 0.08


def vertex_normal_approx(n: int, k: float) -> float:
    """Gaussian approximation of ``P(V_n <= k)``, centred at ``4n/5`` with
    scale ``2 sqrt(n) / 5``."""
    if n < 1:
        raise ValueError("n must be positive")
    return float(ndtr((k - 0.8 * n) / (0.4 * math.sqrt(n))))


def vertex_llt(n: int, k: float) -> float:
    """Local-limit approximation of ``P(V_n = k)``."""
    if n < 1:
        raise ValueError("n must be positive")
    x = (k - 0.8 * n) / (0.4 * math.sqrt(n))
    return 5.0 / (2.0 * math.sqrt(2.0 * n * math.pi)) * math.exp(-0.5 * x * x)


# -- total count -----------------------------------------------------------


def a_n_asym(n: int) -> float:
    """Natural log of ``5^(n + 1/2) / (2 sqrt(pi n^3))``."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 0.5) * math.log(5.0) - math.log(2.0) - 0.5 * (math.log(math.pi) + 3.0 * math.log(n))


def a_n_ratio(exact: int, n: int) -> float:
    """``exact / asymptotic``, computed in log space."""
    return math.exp(math.log(exact) - a_n_asym(n))
