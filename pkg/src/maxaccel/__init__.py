"""Acceleration-bounded relativistic scalar field toolkit.

Evaluates the modified mode functions in log-domain form, verifies them
against the eight-dimensional field equation by finite differences, proves
the a.v/a >= 1 inequality numerically, checks the discretized ladder
algebra, and reproduces the quantum-to-classical transition scaling for
macroscopic objects.
"""

from .extremum import (
    BoundScenario,
    brute_force_min,
    f_min,
    f_of_x,
    inequality_scan,
    ratio_lower_bound,
    x_min,
)
from .fock import CommutatorReport, FockOperator, LadderKind, ModeLattice, build_ladder, commutator_check
from .kinematics import (
    DeviceState,
    FourVector,
    ParticleKinematics,
    accel_velocity_ratio,
    four_acceleration,
    four_momentum,
    four_velocity,
    line_element_8d,
    minkowski_dot,
)
from .modes import (
    Branch,
    LogAmplitude,
    ModeSpec,
    phi1,
    phi2,
    phi_mode,
    suppression_exponent_routes,
    suppression_factor,
    wave_vector_k,
    wave_vector_q,
)
from .pde import (
    ResidualReport,
    Scheme,
    StencilConfig,
    StencilSupportError,
    convergence_order,
    dalembertian_v,
    dalembertian_x,
    residual_8d,
    separation_check,
)
from .transition import (
    ObjectModel,
    Spacing,
    TransitionCurve,
    classicality_threshold,
    macro_state_ln_bound,
    rest_state_ln_magnitude,
    transition_curve,
)
from .units import (
    PhysicalConstants,
    UnitContext,
    UnitMode,
    max_proper_acceleration,
    planck_mass,
    rest_wavelength,
    rho0,
)

__version__ = "0.1.0"
