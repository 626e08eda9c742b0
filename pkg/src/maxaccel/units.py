"""Physical constants, the acceleration bound, and derived scales.

All scale-setting arithmetic lives here: the maximal proper acceleration
``a_max = 2*pi*alpha*sqrt(c^7/(hbar*G))``, the associated length
``rho0 = c^2/a_max``, the Planck mass ``sqrt(hbar*c/G)``, and the rest
Compton wavelength ``hbar/(m*c)``.

Two unit modes are supported.  ``SI`` evaluates everything with the stored
constants.  ``DIMENSIONLESS`` sets ``c = hbar = 1`` and takes ``rho0`` as a
free order-unity parameter, which is the only regime where finite-difference
verification of the field equation is numerically sensible (the SI value of
``rho0`` is around the Planck length).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

__all__ = [
    "PhysicalConstants",
    "UnitContext",
    "UnitMode",
    "PLANCK_MASS_TWO_DIGITS",
    "max_proper_acceleration",
    "rho0",
    "planck_mass",
    "rest_wavelength",
]

TWO_PI = 2.0 * math.pi

# Planck mass at the same two-significant-figure precision as the stored
# constants below; the default used by the many-body transition estimates.
PLANCK_MASS_TWO_DIGITS = 2.2e-8  # kg


@dataclass(frozen=True)
class PhysicalConstants:
    """Stored constant values (rounded, not CODATA-precision).

    Values are stored rather than hard-coded in formulas so callers can
    reproduce published arithmetic verbatim with their own roundings.
    """

    c: float = 2.998e8            # speed of light, m/s
    hbar: float = 1.055e-34       # reduced Planck constant, J*s
    G: float = 6.674e-11          # gravitational constant, m^3/(kg*s^2)
    avogadro: float = 6e23        # nucleons per mole
    nucleon_mass: float = 1.7e-27  # kg

    def __post_init__(self) -> None:
        for name in ("c", "hbar", "G", "avogadro", "nucleon_mass"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


class UnitMode(enum.Enum):
    SI = "si"
    DIMENSIONLESS = "dimensionless"


@dataclass(frozen=True)
class UnitContext:
    """Constants, the order-unity factor ``alpha``, and the unit mode.

    In ``DIMENSIONLESS`` mode ``c`` and ``hbar`` are treated as 1 and
    ``rho0_override`` supplies the length scale directly.  The optional
    ``planck_mass_override`` replaces the computed ``sqrt(hbar*c/G)``; use
    it to run the transition arithmetic with a rounded Planck mass.
    """

    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    alpha: float = 1.0
    mode: UnitMode = UnitMode.SI
    rho0_override: float | None = None
    planck_mass_override: float | None = None

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError("alpha must be strictly positive")
        if self.rho0_override is not None and not self.rho0_override > 0:
            raise ValueError("rho0_override must be strictly positive")
        if self.planck_mass_override is not None and not self.planck_mass_override > 0:
            raise ValueError("planck_mass_override must be strictly positive")

    @property
    def c(self) -> float:
        """Effective speed of light (1 in dimensionless mode)."""
        return 1.0 if self.mode is UnitMode.DIMENSIONLESS else self.constants.c

    @property
    def hbar(self) -> float:
        """Effective reduced Planck constant (1 in dimensionless mode)."""
        return 1.0 if self.mode is UnitMode.DIMENSIONLESS else self.constants.hbar


def max_proper_acceleration(ctx: UnitContext) -> float:
    """Upper bound on proper acceleration, ``2*pi*alpha*sqrt(c^7/(hbar*G))``.

    Only defined in SI mode; the bound is an SI-scale quantity.
    """
    if ctx.mode is not UnitMode.SI:
        raise ValueError("max_proper_acceleration requires SI mode")
    k = ctx.constants
    return TWO_PI * ctx.alpha * math.sqrt(k.c**7 / (k.hbar * k.G))


def rho0(ctx: UnitContext) -> float:
    """Length scale ``c^2/a_max`` (SI) or the dimensionless override."""
    if ctx.mode is UnitMode.DIMENSIONLESS:
        if ctx.rho0_override is None:
            raise ValueError("dimensionless mode requires rho0_override")
        return ctx.rho0_override
    return ctx.constants.c**2 / max_proper_acceleration(ctx)


def planck_mass(ctx: UnitContext) -> float:
    """Planck mass ``sqrt(hbar*c/G)`` in kg, or the stored override."""
    if ctx.mode is not UnitMode.SI:
        raise ValueError("planck_mass requires SI mode")
    if ctx.planck_mass_override is not None:
        return ctx.planck_mass_override
    k = ctx.constants
    return math.sqrt(k.hbar * k.c / k.G)


def rest_wavelength(ctx: UnitContext, mass: float) -> float:
    """Reduced Compton wavelength ``hbar/(m*c)`` of a rest mass (``1/m`` dimensionless)."""
    if not mass > 0:
        raise ValueError("mass must be strictly positive")
    if ctx.mode is UnitMode.DIMENSIONLESS:
        return 1.0 / mass
    k = ctx.constants
    return k.hbar / (mass * k.c)
