"""Minimization analysis behind the lower bound on the ratio a.v/a.

For device speed fraction ``beta``, angle ``theta`` between 3-acceleration
and 3-velocity, and acceleration ratio ``x = |a|/a``, the ratio factors as
``gamma * F(x)`` with ``F(x) = sqrt(1 + x^2) - beta*x*cos(theta)``.  This
module provides F, its analytic minimizer over the physical domain x >= 0,
the resulting closed-form lower bound ``sqrt((1 - beta^2 cos^2 theta) /
(1 - beta^2)) >= 1``, a brute-force grid oracle, and a seeded random scan.

The stationary point of F sits at negative x when ``cos(theta) <= 0``; the
minimum over x >= 0 is then at x = 0 with F = 1, which preserves the >= 1
conclusion.

All scalar functions accept numpy arrays elementwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BoundScenario",
    "f_of_x",
    "x_min",
    "f_min",
    "ratio_lower_bound",
    "brute_force_min",
    "inequality_scan",
    "ScanResult",
]


@dataclass(frozen=True)
class BoundScenario:
    """A sample point (beta, theta, x) of the bound inequality."""

    beta: float
    theta: float
    x: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta < 1.0:
            raise ValueError("beta must lie in [0, 1)")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi]")
        if not self.x >= 0.0:
            raise ValueError("x must be non-negative")


def _f(x, beta, theta):
    return np.sqrt(1.0 + x * x) - beta * x * np.cos(theta)


def f_of_x(s: BoundScenario) -> float:
    """``F(x) = sqrt(1 + x^2) - beta*x*cos(theta)``."""
    return float(_f(s.x, s.beta, s.theta))


def x_min(beta, theta):
    """Location of the minimum of F over x >= 0.

    ``beta*cos(theta)/sqrt(1 - beta^2 cos^2 theta)`` for ``cos(theta) > 0``,
    else 0 (the stationary point falls at negative x and F increases on the
    physical domain).
    """
    bc = beta * np.cos(theta)
    interior = bc / np.sqrt(1.0 - bc * bc)
    out = np.where(bc > 0.0, interior, 0.0)
    return float(out) if np.ndim(out) == 0 else out


def f_min(beta, theta):
    """Minimum of F over x >= 0: ``sqrt(1 - beta^2 cos^2 theta)`` for
    ``cos(theta) > 0``, else ``F(0) = 1``."""
    bc = beta * np.cos(theta)
    out = np.where(bc > 0.0, np.sqrt(1.0 - bc * bc), 1.0)
    return float(out) if np.ndim(out) == 0 else out


def ratio_lower_bound(beta, theta):
    """``gamma * F(x_min) = sqrt((1 - beta^2 cos^2 theta)/(1 - beta^2))``; always >= 1."""
    bc = beta * np.cos(theta)
    out = np.sqrt((1.0 - bc * bc) / (1.0 - beta * beta))
    return float(out) if np.ndim(out) == 0 else out


def brute_force_min(
    beta: float,
    theta: float,
    x_hi: float = 10.0,
    points: int = 200_001,
) -> tuple[float, float]:
    """Grid search for the minimum of F over [0, x_hi].

    Independent oracle for :func:`x_min` / :func:`f_min`: no calculus, just
    an argmin over a dense uniform grid (ties resolve to the smaller x).
    Defaults cover x in [0, 10] with 2e5 points.
    """
    if points < 2:
        raise ValueError("grid needs at least two points")
    if not x_hi > 0.0:
        raise ValueError("x_hi must be positive")
    xs = np.linspace(0.0, x_hi, points)
    values = _f(xs, beta, theta)
    i = int(np.argmin(values))
    return float(xs[i]), float(values[i])


@dataclass(frozen=True)
class ScanResult:
    """Outcome of a seeded random scan of the bound inequality.

    ``violations`` holds one (beta, theta, x, gammaF, bound) row per sample
    that failed ``gammaF >= bound >= 1`` within the tolerance; ``min_slack``
    is the smallest observed ``gammaF - bound`` (>= 0 when the bound holds).
    """

    samples: int
    seed: int
    tolerance: float
    violations: tuple[tuple[float, float, float, float, float], ...]
    min_slack: float

    @property
    def passed(self) -> bool:
        return not self.violations


# Cap on sampled beta: the bound and gammaF both diverge like gamma as
# beta -> 1, and float rounding there would swamp an absolute tolerance.
SCAN_BETA_MAX = 0.999


def inequality_scan(samples: int, seed: int, tolerance: float = 1e-12) -> ScanResult:
    """Sample (beta, theta, x) with a seeded PCG64 stream and test the bound chain.

    beta ~ U[0, SCAN_BETA_MAX], theta ~ U[0, pi], x ~ U[0, 10].  A sample
    violates when ``gamma*F(x) < bound - tolerance`` or ``bound < 1 - tolerance``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not tolerance >= 0.0:
        raise ValueError("tolerance must be non-negative")
    rng = np.random.default_rng(seed)
    beta = rng.uniform(0.0, SCAN_BETA_MAX, samples)
    theta = rng.uniform(0.0, math.pi, samples)
    x = rng.uniform(0.0, 10.0, samples)

    gamma = 1.0 / np.sqrt(1.0 - beta * beta)
    gamma_f = gamma * _f(x, beta, theta)
    bound = ratio_lower_bound(beta, theta)

    bad = (gamma_f < bound - tolerance) | (bound < 1.0 - tolerance)
    rows = tuple(
        (float(beta[i]), float(theta[i]), float(x[i]), float(gamma_f[i]), float(bound[i]))
        for i in np.flatnonzero(bad)
    )
    return ScanResult(
        samples=samples,
        seed=seed,
        tolerance=tolerance,
        violations=rows,
        min_slack=float(np.min(gamma_f - bound)),
    )
