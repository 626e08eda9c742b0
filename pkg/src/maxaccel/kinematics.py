"""Four-vector algebra with signature (+,-,-,-) and the 8-D line element.

The carriers are plain frozen dataclasses: a :class:`FourVector` holds the
(time, space) components of any of the four-vectors used downstream
(position, velocity, acceleration, momentum, wave vectors), a
:class:`DeviceState` holds the measuring device's position and 3-velocity,
and a :class:`ParticleKinematics` holds the particle parameters.

The particle four-acceleration follows the convention ``a^0 =
sqrt(a^2 + |a|^2)`` so its self-contraction equals the squared proper
acceleration exactly; the device four-velocity is ``(gamma, gamma*u/c)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "FourVector",
    "DeviceState",
    "ParticleKinematics",
    "minkowski_dot",
    "four_velocity",
    "four_acceleration",
    "four_momentum",
    "accel_velocity_ratio",
    "line_element_8d",
]

# Relative margin below the speed of light under which velocities are
# rejected outright; silent gamma overflow would corrupt every downstream
# exponent.
SPEED_MARGIN = 1e-12

METRIC_SIGNS = (1.0, -1.0, -1.0, -1.0)


@dataclass(frozen=True)
class FourVector:
    """A (time, 3-space) tuple contracted under signature (+,-,-,-)."""

    t: float
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        for name in ("t", "x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_components(cls, components: Iterable[float]) -> "FourVector":
        t, x, y, z = components
        return cls(float(t), float(x), float(y), float(z))

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.t, self.x, self.y, self.z)

    @property
    def spatial(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def dot(self, other: "FourVector") -> float:
        return minkowski_dot(self, other)

    def scaled(self, factor: float) -> "FourVector":
        return FourVector(factor * self.t, factor * self.x, factor * self.y, factor * self.z)

    def shifted(self, axis: int, delta: float) -> "FourVector":
        """Return a copy with ``delta`` added to component ``axis`` (0..3)."""
        parts = list(self.components)
        parts[axis] += delta
        return FourVector(*parts)

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t + other.t, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t - other.t, self.x - other.x, self.y - other.y, self.z - other.z)


def _as_vec3(v: Sequence[float]) -> tuple[float, float, float]:
    a, b, c = v
    return (float(a), float(b), float(c))


def _norm3(v: Sequence[float]) -> float:
    return math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def _dot3(u: Sequence[float], w: Sequence[float]) -> float:
    return u[0] * w[0] + u[1] * w[1] + u[2] * w[2]


@dataclass(frozen=True)
class DeviceState:
    """Measuring device: spacetime position (t-component = c*t) and 3-velocity in m/s.

    The 3-velocity is relative to the particle; there is no second frame.
    """

    position: FourVector = FourVector(0.0)
    velocity3: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "velocity3", _as_vec3(self.velocity3))


@dataclass(frozen=True)
class ParticleKinematics:
    """Particle parameters: mass, 3-momentum, proper acceleration and 3-acceleration.

    ``proper_accel`` is the invariant magnitude ``a``; the time component of
    the four-acceleration is derived as ``sqrt(a^2 + |accel3|^2)``.
    """

    mass: float
    momentum3: tuple[float, float, float] = (0.0, 0.0, 0.0)
    proper_accel: float = 1.0
    accel3: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        if not self.mass > 0:
            raise ValueError("mass must be strictly positive")
        if not self.proper_accel > 0:
            raise ValueError("proper_accel must be strictly positive")
        object.__setattr__(self, "momentum3", _as_vec3(self.momentum3))
        object.__setattr__(self, "accel3", _as_vec3(self.accel3))


def minkowski_dot(u: FourVector, w: FourVector) -> float:
    """Contraction ``u_t w_t - u_x w_x - u_y w_y - u_z w_z``."""
    return u.t * w.t - u.x * w.x - u.y * w.y - u.z * w.z


def lorentz_gamma(velocity3: Sequence[float], c: float) -> float:
    """``(1 - |u|^2/c^2)^{-1/2}``; rejects speeds within SPEED_MARGIN of c."""
    beta = _norm3(velocity3) / c
    if beta >= 1.0 - SPEED_MARGIN:
        raise ValueError(f"device speed {beta:.15g}c is too close to the speed of light")
    return 1.0 / math.sqrt(1.0 - beta * beta)


def four_velocity(dev: DeviceState, c: float) -> FourVector:
    """Dimensionless device four-velocity ``(gamma, gamma*u/c)``."""
    g = lorentz_gamma(dev.velocity3, c)
    u = dev.velocity3
    return FourVector(g, g * u[0] / c, g * u[1] / c, g * u[2] / c)


def four_acceleration(part: ParticleKinematics) -> FourVector:
    """Particle four-acceleration ``(sqrt(a^2 + |a|^2), a)``; self-dot is ``a^2``."""
    a3 = part.accel3
    a0 = math.hypot(part.proper_accel, _norm3(a3))
    return FourVector(a0, a3[0], a3[1], a3[2])


def four_momentum(part: ParticleKinematics, c: float) -> FourVector:
    """Particle four-momentum ``(sqrt(m^2 c^2 + |p|^2), p)``; self-dot is ``m^2 c^2``."""
    p3 = part.momentum3
    p0 = math.hypot(part.mass * c, _norm3(p3))
    return FourVector(p0, p3[0], p3[1], p3[2])


def accel_velocity_ratio(part: ParticleKinematics, dev: DeviceState, c: float) -> float:
    """The invariant ratio ``a.v/a = gamma*[sqrt(1 + (|a|/a)^2) - (a/a).(u/c)]``.

    Always >= 1 for physical inputs (see :mod:`maxaccel.extremum` for the
    closed-form lower bound).
    """
    g = lorentz_gamma(dev.velocity3, c)
    a = part.proper_accel
    x = _norm3(part.accel3) / a
    drift = _dot3(part.accel3, dev.velocity3) / (a * c)
    return g * (math.sqrt(1.0 + x * x) - drift)


def line_element_8d(dx: FourVector, dv: FourVector, rho0: float) -> float:
    """Squared interval ``dx.dx + rho0^2 * dv.dv`` on spacetime x velocity space.

    Non-negative along worldlines whose proper acceleration stays below the
    maximal value ``c^2/rho0``.
    """
    return minkowski_dot(dx, dx) + rho0 * rho0 * minkowski_dot(dv, dv)
