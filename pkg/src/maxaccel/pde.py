"""Finite-difference verification of the eight-dimensional field equation.

The closed-form modes satisfy ``(box_x + rho0^-2 box_v) phi = 0`` away from
the support boundary.  This module estimates both d'Alembertians with
second-order central differences, reports residuals relative to the natural
scale ``(m c/hbar)^2 |phi|``, and fits the convergence order from a step
sequence.

Verification only makes sense in dimensionless units with an order-unity
rho0; at the SI value (~Planck length) the ``rho0^-2 box_v`` term is beyond
float range.  Stencils are kept away from the Heaviside boundary by a
support margin, mirroring the analytic argument that the delta-function
terms vanish where ``a.v/a >= 1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .kinematics import METRIC_SIGNS, FourVector, ParticleKinematics, four_acceleration, minkowski_dot
from .modes import Branch, LogAmplitude, ModeSpec, phi1, phi2, phi_mode
from .units import UnitContext, rho0

__all__ = [
    "Scheme",
    "StencilConfig",
    "ResidualReport",
    "StencilSupportError",
    "ResidualFloorError",
    "dalembertian_x",
    "dalembertian_v",
    "residual_8d",
    "separation_check",
    "convergence_order",
    "loglog_slope",
    "stencil_margin",
    "sample_interior_point",
]

FieldSampler = Callable[[FourVector, FourVector], Union[complex, LogAmplitude]]


class StencilSupportError(ValueError):
    """A stencil touched or crossed the Heaviside support boundary."""


class ResidualFloorError(RuntimeError):
    """Residuals sit at the noise floor; a convergence slope is meaningless."""


class Scheme(enum.Enum):
    CENTRAL2 = "central2"


@dataclass(frozen=True)
class StencilConfig:
    """Step size, difference scheme, and minimum distance from the support edge."""

    h: float = 1e-3
    scheme: Scheme = Scheme.CENTRAL2
    support_margin: float = 0.1

    def __post_init__(self) -> None:
        if not self.h > 0:
            raise ValueError("step size h must be positive")
        if self.support_margin < 0.1:
            raise ValueError("support_margin must be at least 0.1")


@dataclass(frozen=True)
class ResidualReport:
    """Field-equation residual at one (x, v) sample point.

    ``point`` is the 8-tuple (t, x, y, z, v0, v1, v2, v3).  ``residual`` and
    ``relative_residual`` are None when the field vanishes at the point
    (wrong-branch support) and the check was skipped.
    """

    point: tuple[float, ...]
    residual: complex | None
    relative_residual: float | None
    h: float

    @property
    def skipped(self) -> bool:
        return self.residual is None


def _sample(f: FieldSampler, x: FourVector, v: FourVector) -> tuple[complex, bool | None]:
    value = f(x, v)
    if isinstance(value, LogAmplitude):
        return value.to_complex(), value.support
    return complex(value), None


def _second_differences(
    f: FieldSampler, x: FourVector, v: FourVector, cfg: StencilConfig, move_v: bool
) -> complex:
    h = cfg.h
    center, support0 = _sample(f, x, v)
    total = 0.0 + 0.0j
    for axis, sign in enumerate(METRIC_SIGNS):
        if move_v:
            up, su = _sample(f, x, v.shifted(axis, h))
            dn, sd = _sample(f, x, v.shifted(axis, -h))
        else:
            up, su = _sample(f, x.shifted(axis, h), v)
            dn, sd = _sample(f, x.shifted(axis, -h), v)
        for s in (su, sd):
            if s is not None and s != support0:
                raise StencilSupportError(
                    "support flag flips within the stencil; move the point or shrink h"
                )
        total += sign * (up - 2.0 * center + dn)
    return total / (h * h)


def dalembertian_x(f: FieldSampler, x: FourVector, v: FourVector, cfg: StencilConfig) -> complex:
    """Central-difference ``d^2/dt^2 - laplacian`` in the spacetime slot at fixed v."""
    return _second_differences(f, x, v, cfg, move_v=False)


def dalembertian_v(f: FieldSampler, x: FourVector, v: FourVector, cfg: StencilConfig) -> complex:
    """Central-difference d'Alembertian in the four-velocity slot at fixed x."""
    return _second_differences(f, x, v, cfg, move_v=True)


def stencil_margin(spec: ModeSpec, v: FourVector, h: float) -> float:
    """Smallest |a.v/a| over the v-stencil at step h, negative if the sign flips.

    Useful for planning sample points before paying for a residual.
    """
    a4 = four_acceleration(spec.part)
    a = spec.part.proper_accel
    center = minkowski_dot(a4, v) / a
    side = 1.0 if center >= 0 else -1.0
    worst = side * center
    for axis in range(4):
        for delta in (h, -h):
            r = minkowski_dot(a4, v.shifted(axis, delta)) / a
            worst = min(worst, side * r)
    return worst


def residual_8d(spec: ModeSpec, x: FourVector, v: FourVector, cfg: StencilConfig) -> ResidualReport:
    """Residual of ``(box_x + rho0^-2 box_v) phi`` at one point.

    Raises :class:`StencilSupportError` if any stencil point comes within
    ``cfg.support_margin`` of the support boundary.  Returns a skipped
    report when the field is zero at the center (wrong-branch support).
    """
    point = x.components + v.components
    center = phi_mode(spec, x, v)
    if not center.support:
        return ResidualReport(point, None, None, cfg.h)
    if stencil_margin(spec, v, cfg.h) < cfg.support_margin:
        raise StencilSupportError(
            f"stencil comes within {cfg.support_margin} of the support boundary"
        )

    def f(xx: FourVector, vv: FourVector) -> LogAmplitude:
        return phi_mode(spec, xx, vv)

    r0 = rho0(spec.ctx)
    residual = dalembertian_x(f, x, v, cfg) + dalembertian_v(f, x, v, cfg) / (r0 * r0)
    scale = (spec.part.mass * spec.ctx.c / spec.ctx.hbar) ** 2
    relative = abs(residual) / (scale * abs(center.to_complex()))
    return ResidualReport(point, residual, relative, cfg.h)


def separation_check(
    spec: ModeSpec, x: FourVector, v: FourVector, cfg: StencilConfig
) -> tuple[complex, complex]:
    """Separation constants ``(box_x phi1/phi1, rho0^-2 box_v phi2/phi2)``.

    The two should be ``-(m c/hbar)^2`` and ``+(m c/hbar)^2`` up to
    truncation error, summing to ~0.
    """
    p1 = phi1(spec, x).to_complex()
    p2 = phi2(spec, v).to_complex()
    if p1 == 0 or p2 == 0:
        raise ZeroDivisionError("mode factor vanishes at the requested point")
    lhs_x = dalembertian_x(lambda xx, vv: phi1(spec, xx), x, v, cfg) / p1
    r0 = rho0(spec.ctx)
    lhs_v = dalembertian_v(lambda xx, vv: phi2(spec, vv), x, v, cfg) / (r0 * r0) / p2
    return lhs_x, lhs_v


def loglog_slope(
    h_values: Sequence[float], magnitudes: Sequence[float], noise_floor: float = 0.0
) -> float:
    """Least-squares slope of log(magnitude) against log(h).

    Raises :class:`ResidualFloorError` when any magnitude is at or below
    ``noise_floor`` (zero residuals always trip this).
    """
    if len(h_values) < 3:
        raise ValueError("need at least three step sizes")
    if len(h_values) != len(magnitudes):
        raise ValueError("h_values and magnitudes must have equal length")
    hs = np.asarray(h_values, dtype=float)
    if not np.all(np.diff(hs) < 0):
        raise ValueError("step sizes must be strictly decreasing")
    mags = np.asarray(magnitudes, dtype=float)
    if np.any(mags <= noise_floor):
        raise ResidualFloorError("residuals at the noise floor; slope is meaningless")
    return float(np.polyfit(np.log(hs), np.log(mags), 1)[0])


def sample_interior_point(
    rng: np.random.Generator,
    ctx: UnitContext,
    mass: float,
    h_max: float,
    margin: float = 0.1,
) -> tuple[ModeSpec, FourVector, FourVector]:
    """Draw a positive-branch mode and an (x, v) point safe for stencils up to h_max.

    Kinematics are drawn around the natural scales (momentum ~ mass*c,
    order-unity accelerations); v comes from a box around physical
    four-velocities.  Rejection-samples until the whole stencil sits at
    least ``margin`` inside the support region.
    """
    for _ in range(10_000):
        part = ParticleKinematics(
            mass=mass,
            momentum3=tuple(rng.normal(0.0, mass * ctx.c, 3)),
            proper_accel=float(rng.uniform(0.5, 2.0)),
            accel3=tuple(rng.normal(0.0, 1.0, 3)),
        )
        spec = ModeSpec(ctx=ctx, part=part, branch=Branch.POSITIVE)
        x = FourVector(*rng.uniform(-1.0, 1.0, 4))
        v = FourVector(float(rng.uniform(1.0, 2.0)), *rng.uniform(-1.0, 1.0, 3))
        on_positive_side = minkowski_dot(four_acceleration(part), v) >= 0
        if on_positive_side and stencil_margin(spec, v, h_max) >= margin:
            return spec, x, v
    raise RuntimeError("could not sample an interior point; margin too demanding")


def convergence_order(
    spec: ModeSpec,
    x: FourVector,
    v: FourVector,
    h_values: Sequence[float],
    support_margin: float = 0.1,
) -> float:
    """Observed order of accuracy of the residual at one point (~2 for CENTRAL2)."""
    mags = []
    for h in h_values:
        cfg = StencilConfig(h=h, support_margin=support_margin)
        report = residual_8d(spec, x, v, cfg)
        if report.skipped:
            raise StencilSupportError("field vanishes at the point; no residual to fit")
        mags.append(abs(report.residual))
    return loglog_slope(h_values, mags)
