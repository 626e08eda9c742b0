"""Quantum-state magnitudes of uncorrelated many-body objects.

A rest-frame single particle of mass m has state magnitude
``exp(-(1/(2 pi alpha)) (m/m_Pl) sqrt(1 + (|a|/a)^2))``.  An object of N
identical nucleons, modeled as N uncorrelated factors, multiplies the
exponents, so its magnitude bound is N times the per-nucleon log.  Beyond
Avogadro's number of nucleons the log-magnitude is of order -1e3 and the
object is classical for all practical purposes; the transition is gradual
in N.

Everything here works in log space: e^-7379 underflows any float format.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .units import TWO_PI, UnitContext, planck_mass

__all__ = [
    "ObjectModel",
    "CurveSample",
    "TransitionCurve",
    "Spacing",
    "rest_state_ln_magnitude",
    "macro_state_ln_bound",
    "transition_curve",
    "classicality_threshold",
]

LN10 = math.log(10.0)


class Spacing(enum.Enum):
    LOG = "log"
    LINEAR = "linear"


@dataclass(frozen=True)
class ObjectModel:
    """An uncorrelated collection of identical nucleons at rest.

    No binding energy, no internal structure: total mass is
    ``n_nucleons * nucleon_mass`` and exponents add.
    """

    n_nucleons: float
    nucleon_mass: float
    accel_ratio: float = 0.0
    alpha: float = 1.0

    def __post_init__(self) -> None:
        if not self.n_nucleons >= 1:
            raise ValueError("n_nucleons must be at least 1")
        if not self.nucleon_mass > 0:
            raise ValueError("nucleon_mass must be strictly positive")
        if self.accel_ratio < 0:
            raise ValueError("accel_ratio must be non-negative")
        if not self.alpha > 0:
            raise ValueError("alpha must be strictly positive")

    @property
    def mass(self) -> float:
        return self.n_nucleons * self.nucleon_mass


@dataclass(frozen=True)
class CurveSample:
    n_nucleons: float
    mass_kg: float
    ln_magnitude: float
    log10_magnitude: float


@dataclass(frozen=True)
class TransitionCurve:
    """Sampled log-magnitude bound versus nucleon count, plus the inputs that shaped it."""

    samples: tuple[CurveSample, ...]
    alpha: float
    accel_ratio: float
    nucleon_mass: float
    planck_mass: float


def rest_state_ln_magnitude(
    mass: float, accel_ratio: float, alpha: float, ctx: UnitContext
) -> float:
    """ln of a single rest-frame particle's state magnitude (normalization 1).

    ``-(1/(2 pi alpha)) * (mass/m_Pl) * sqrt(1 + accel_ratio^2)``; the
    plane-wave phase carries unit modulus and is excluded.
    """
    if not mass > 0:
        raise ValueError("mass must be strictly positive")
    if not alpha > 0:
        raise ValueError("alpha must be strictly positive")
    m_pl = planck_mass(ctx)
    return -(mass / m_pl) * math.sqrt(1.0 + accel_ratio * accel_ratio) / (TWO_PI * alpha)


def macro_state_ln_bound(obj: ObjectModel, ctx: UnitContext) -> float:
    """ln of the many-body magnitude bound: exactly n_nucleons per-nucleon logs."""
    per_nucleon = rest_state_ln_magnitude(obj.nucleon_mass, obj.accel_ratio, obj.alpha, ctx)
    return obj.n_nucleons * per_nucleon


def transition_curve(
    n_min: float,
    n_max: float,
    points: int,
    spacing: Spacing,
    obj_template: ObjectModel,
    ctx: UnitContext,
) -> TransitionCurve:
    """Sample the bound over a nucleon-count grid; strictly decreasing in n."""
    if not 1 <= n_min < n_max:
        raise ValueError("need 1 <= n_min < n_max")
    if points < 2:
        raise ValueError("points must be at least 2")
    if spacing is Spacing.LOG:
        grid = np.logspace(math.log10(n_min), math.log10(n_max), points)
    else:
        grid = np.linspace(n_min, n_max, points)
    per_nucleon = rest_state_ln_magnitude(
        obj_template.nucleon_mass, obj_template.accel_ratio, obj_template.alpha, ctx
    )
    samples = []
    for n in grid:
        n = float(n)
        ln_mag = n * per_nucleon
        samples.append(
            CurveSample(n, n * obj_template.nucleon_mass, ln_mag, ln_mag / LN10)
        )
    return TransitionCurve(
        samples=tuple(samples),
        alpha=obj_template.alpha,
        accel_ratio=obj_template.accel_ratio,
        nucleon_mass=obj_template.nucleon_mass,
        planck_mass=planck_mass(ctx),
    )


def classicality_threshold(obj_template: ObjectModel, ln_cutoff: float, ctx: UnitContext) -> float:
    """Nucleon count where the bound crosses ``ln_cutoff``: ``ln_cutoff / per-nucleon ln``."""
    if not ln_cutoff < 0:
        raise ValueError("ln_cutoff must be negative")
    per_nucleon = rest_state_ln_magnitude(
        obj_template.nucleon_mass, obj_template.accel_ratio, obj_template.alpha, ctx
    )
    if per_nucleon == 0:
        raise ValueError("per-nucleon exponent is zero; no crossing exists")
    return ln_cutoff / per_nucleon
