"""Separable mode functions of the acceleration-bounded scalar field.

A mode factors into a plane wave in spacetime and a real exponential in
four-velocity space:

    phi_plus(x, v)  = phi0 * exp(+i p.x/hbar) * exp(-(rho0/lam0) * r) * step(+r)
    phi_minus(x, v) = phi0 * exp(-i p.x/hbar) * exp(+(rho0/lam0) * r) * step(-r)

with ``r = a.v/a`` and ``lam0 = hbar/(m c)``.  Values are carried in
log-domain form (:class:`LogAmplitude`) because the velocity-space exponent
reaches magnitudes of order 1e3..1e32 for macroscopic masses.

The step function is 1 at zero, so both branches have support on the
boundary r = 0.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .kinematics import (
    DeviceState,
    FourVector,
    ParticleKinematics,
    four_acceleration,
    four_momentum,
    lorentz_gamma,
    minkowski_dot,
)
from .units import TWO_PI, UnitContext, UnitMode, planck_mass, rest_wavelength, rho0

__all__ = [
    "Branch",
    "LogAmplitude",
    "ModeSpec",
    "wave_vector_k",
    "wave_vector_q",
    "phi1",
    "phi2",
    "phi_mode",
    "suppression_factor",
    "suppression_exponent_routes",
]


class Branch(enum.Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"

    @property
    def sign(self) -> float:
        return 1.0 if self is Branch.POSITIVE else -1.0


def _wrap_phase(phase: float) -> float:
    """Reduce a phase to (-pi, pi]; the lower edge folds to +pi."""
    r = math.remainder(phase, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


@dataclass(frozen=True)
class LogAmplitude:
    """A complex value stored as (ln magnitude, phase, support flag).

    ``support=False`` means the represented value is exactly zero no matter
    what ``log_mag`` holds.  Products add log-magnitudes and phases and AND
    the support flags.  Phases are normalized to (-pi, pi] at construction.
    """

    log_mag: float
    phase: float = 0.0
    support: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", _wrap_phase(self.phase))

    def __mul__(self, other: "LogAmplitude") -> "LogAmplitude":
        return LogAmplitude(
            self.log_mag + other.log_mag,
            self.phase + other.phase,
            self.support and other.support,
        )

    def to_complex(self) -> complex:
        """Materialize the value; overflows for log_mag above ~709."""
        if not self.support:
            return 0.0 + 0.0j
        return cmath.rect(math.exp(self.log_mag), self.phase)

    @classmethod
    def from_complex(cls, z: complex) -> "LogAmplitude":
        z = complex(z)
        if z == 0:
            return cls(-math.inf, 0.0, True)
        return cls(math.log(abs(z)), cmath.phase(z), True)


@dataclass(frozen=True)
class ModeSpec:
    """One field mode: unit context, particle parameters, branch, amplitude.

    ``amplitude0`` is the free overall constant (default 1); it multiplies
    the plane-wave factor.
    """

    ctx: UnitContext
    part: ParticleKinematics
    branch: Branch = Branch.POSITIVE
    amplitude0: complex = 1.0 + 0.0j

    @property
    def exponent_scale(self) -> float:
        """rho0/lam0, the decay rate of the velocity-space factor."""
        return rho0(self.ctx) / rest_wavelength(self.ctx, self.part.mass)


def wave_vector_k(spec: ModeSpec) -> FourVector:
    """Spacetime wave four-vector ``p/hbar``; self-dot is ``(m c/hbar)^2``."""
    p = four_momentum(spec.part, spec.ctx.c)
    return p.scaled(1.0 / spec.ctx.hbar)


def wave_vector_q(spec: ModeSpec) -> FourVector:
    """Velocity-space wave four-vector ``(rho0/lam0) * a/a``; self-dot is ``(rho0 m c/hbar)^2``."""
    a4 = four_acceleration(spec.part)
    return a4.scaled(spec.exponent_scale / spec.part.proper_accel)


def _amp0_log(spec: ModeSpec) -> tuple[float, float]:
    z = complex(spec.amplitude0)
    if z == 0:
        return -math.inf, 0.0
    return math.log(abs(z)), cmath.phase(z)


def phi1(spec: ModeSpec, x: FourVector) -> LogAmplitude:
    """Plane-wave factor ``amplitude0 * exp(+/- i p.x/hbar)`` at spacetime point x.

    The phase is reduced to (-pi, pi] after forming the dimensionless
    product p.x/hbar.
    """
    log_mag, arg0 = _amp0_log(spec)
    p = four_momentum(spec.part, spec.ctx.c)
    phase = spec.branch.sign * minkowski_dot(p, x) / spec.ctx.hbar
    return LogAmplitude(log_mag, arg0 + phase, True)


def phi2(spec: ModeSpec, v: FourVector) -> LogAmplitude:
    """Velocity-space factor ``exp(-/+ (rho0/lam0) * a.v/a) * step(+/- a.v/a)``.

    v is a free tangent-space coordinate; it need not lie on the unit shell.
    """
    a4 = four_acceleration(spec.part)
    ratio = minkowski_dot(a4, v) / spec.part.proper_accel
    sign = spec.branch.sign
    return LogAmplitude(-sign * spec.exponent_scale * ratio, 0.0, sign * ratio >= 0.0)


def phi_mode(spec: ModeSpec, x: FourVector, v: FourVector) -> LogAmplitude:
    """Full separable mode value phi1(x) * phi2(v)."""
    return phi1(spec, x) * phi2(spec, v)


def _planck_mass_for_exponent(ctx: UnitContext) -> float:
    # In dimensionless units the acceleration bound fixes the Planck mass as
    # 1/(2*pi*alpha*rho0), which keeps the two exponent routes identical.
    if ctx.mode is UnitMode.DIMENSIONLESS:
        return 1.0 / (TWO_PI * ctx.alpha * rho0(ctx))
    return planck_mass(ctx)


def suppression_factor(spec: ModeSpec, dev: DeviceState) -> float:
    """Natural log of the real factor multiplying both frequency branches.

    Computed as ``-(1/(2 pi alpha)) * (gamma m / m_Pl) * [sqrt(1 + (|a|/a)^2)
    - (a/a).(u/c)]`` with the device's gamma and 3-velocity u.  Equal to
    ``-(rho0/lam0) * |a.v/a|`` when the Planck mass is the computed
    ``sqrt(hbar c/G)``.
    """
    return suppression_exponent_routes(spec, dev)[1]


def suppression_exponent_routes(spec: ModeSpec, dev: DeviceState) -> tuple[float, float]:
    """Both forms of the suppression exponent: (via the a.v/a ratio, via the Planck mass).

    The two agree to rounding error unless the context overrides the Planck
    mass away from ``sqrt(hbar c/G)``.
    """
    part = spec.part
    ctx = spec.ctx
    c = ctx.c
    g = lorentz_gamma(dev.velocity3, c)
    a = part.proper_accel
    a3 = part.accel3
    u = dev.velocity3
    x = math.sqrt(a3[0] ** 2 + a3[1] ** 2 + a3[2] ** 2) / a
    drift = (a3[0] * u[0] + a3[1] * u[1] + a3[2] * u[2]) / (a * c)
    bracket = math.sqrt(1.0 + x * x) - drift

    via_ratio = -spec.exponent_scale * abs(g * bracket)
    m_pl = _planck_mass_for_exponent(ctx)
    via_planck = -(1.0 / (TWO_PI * ctx.alpha)) * (g * part.mass / m_pl) * bracket
    return via_ratio, via_planck
