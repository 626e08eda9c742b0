import cmath
import math

import numpy as np
import pytest

from maxaccel.kinematics import FourVector, ParticleKinematics, minkowski_dot
from maxaccel.modes import Branch, LogAmplitude, ModeSpec, phi2, wave_vector_k
from maxaccel.pde import (
    ResidualFloorError,
    Scheme,
    StencilConfig,
    StencilSupportError,
    convergence_order,
    dalembertian_v,
    dalembertian_x,
    loglog_slope,
    residual_8d,
    sample_interior_point,
    separation_check,
    stencil_margin,
)
from maxaccel.units import UnitContext, UnitMode

H_SEQUENCE = (1e-2, 5e-3, 2.5e-3)


def ctx_with(rho):
    return UnitContext(mode=UnitMode.DIMENSIONLESS, rho0_override=rho)


def rest_spec(rho=0.1, mass=1.0):
    return ModeSpec(ctx_with(rho), ParticleKinematics(mass=mass, proper_accel=1.0))


ORIGIN = FourVector(0.0)
V_REST = FourVector(1.0, 0.0, 0.0, 0.0)


def test_stencil_config_validation():
    cfg = StencilConfig(h=1e-3)
    assert cfg.scheme is Scheme.CENTRAL2
    with pytest.raises(ValueError):
        StencilConfig(h=0.0)
    with pytest.raises(ValueError):
        StencilConfig(h=1e-3, support_margin=0.05)


def test_dalembertian_x_annihilates_constant_and_affine():
    cfg = StencilConfig(h=1e-2)
    const = lambda x, v: 2.5 + 1j
    assert dalembertian_x(const, ORIGIN, V_REST, cfg) == 0j
    affine = lambda x, v: 3.0 * x.t - 2.0 * x.y + 0.5
    assert abs(dalembertian_x(affine, ORIGIN, V_REST, cfg)) < 1e-9


def test_dalembertian_x_plane_wave():
    # f = exp(i k.x) with k = (1,0,0,0): box_x f = -f, error O(h^2)
    spec = rest_spec()
    k = wave_vector_k(spec)

    def f(x, v):
        return cmath.exp(1j * minkowski_dot(k, x))

    x0 = FourVector(0.3, -0.2, 0.5, 0.1)
    for h in H_SEQUENCE:
        value = dalembertian_x(f, x0, V_REST, StencilConfig(h=h))
        expected = -f(x0, V_REST)
        assert abs(value - expected) < 0.2 * h * h


def test_dalembertian_v_mode_factor():
    # phi2 with rho0/lam0 = 1 satisfies box_v phi2 = phi2
    spec = rest_spec(rho=1.0)
    assert spec.exponent_scale == pytest.approx(1.0)

    def f(x, v):
        return phi2(spec, v)

    v0 = FourVector(1.2, 0.1, -0.3, 0.2)
    phi_v0 = phi2(spec, v0).to_complex()
    for h in H_SEQUENCE:
        value = dalembertian_v(f, ORIGIN, v0, StencilConfig(h=h))
        assert abs(value - phi_v0) < 0.5 * h * h * abs(phi_v0)


def test_dalembertian_v_unit_exponential():
    # f = exp(-n.v) with n.n = 1 gives box_v f = f
    w = (0.4, -0.3, 0.2)
    n = FourVector(math.sqrt(1 + sum(c * c for c in w)), *w)
    assert minkowski_dot(n, n) == pytest.approx(1.0, rel=1e-15)

    def f(x, v):
        return cmath.exp(-minkowski_dot(n, v))

    v0 = FourVector(1.4, 0.2, 0.1, -0.2)
    h = 1e-3
    value = dalembertian_v(f, ORIGIN, v0, StencilConfig(h=h))
    assert abs(value - f(ORIGIN, v0)) < 1e-5 * abs(f(ORIGIN, v0))
    assert dalembertian_v(lambda x, v: 7.0, ORIGIN, v0, StencilConfig(h=h)) == 0j


def test_stencil_linearity():
    cfg = StencilConfig(h=2e-3)
    f = lambda x, v: cmath.exp(1j * (x.t - 0.5 * x.x)) * (1.0 + v.t)
    g = lambda x, v: math.cos(x.y) + 1j * math.sin(v.z)
    a, b = 1.7 - 0.4j, -2.2 + 1j
    combo = lambda x, v: a * f(x, v) + b * g(x, v)
    x0, v0 = FourVector(0.2, 0.4, -0.1, 0.3), FourVector(1.1, 0.2, 0.0, -0.4)
    for op in (dalembertian_x, dalembertian_v):
        lhs = op(combo, x0, v0, cfg)
        rhs = a * op(f, x0, v0, cfg) + b * op(g, x0, v0, cfg)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


def test_residual_8d_rest_mode():
    spec = rest_spec(rho=0.1)
    report = residual_8d(spec, ORIGIN, V_REST, StencilConfig(h=1e-3))
    assert not report.skipped
    assert report.relative_residual < 1e-4
    assert report.point == (0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0)


def test_residual_8d_richardson_ratio():
    spec = rest_spec(rho=0.1)
    coarse = residual_8d(spec, ORIGIN, V_REST, StencilConfig(h=2e-3))
    fine = residual_8d(spec, ORIGIN, V_REST, StencilConfig(h=1e-3))
    ratio = abs(coarse.residual) / abs(fine.residual)
    assert 3.3 < ratio < 4.7


def test_residual_8d_skips_dead_branch():
    spec = ModeSpec(
        ctx_with(0.1), ParticleKinematics(mass=1.0, proper_accel=1.0), branch=Branch.NEGATIVE
    )
    report = residual_8d(spec, ORIGIN, V_REST, StencilConfig(h=1e-3))
    assert report.skipped
    assert report.residual is None and report.relative_residual is None


def test_residual_8d_margin_enforced():
    spec = rest_spec(rho=0.1)
    # ratio = v0 here; 0.05 sits inside the default margin of 0.1
    near_boundary = FourVector(0.05, 0.0, 0.0, 0.0)
    with pytest.raises(StencilSupportError):
        residual_8d(spec, ORIGIN, near_boundary, StencilConfig(h=1e-3))


def test_support_flip_detected():
    spec = rest_spec(rho=0.1)

    def f(x, v):
        return phi2(spec, v)

    straddling = FourVector(5e-4, 0.0, 0.0, 0.0)  # boundary inside the 1e-3 stencil
    with pytest.raises(StencilSupportError):
        dalembertian_v(f, ORIGIN, straddling, StencilConfig(h=1e-3))


def test_stencil_margin_helper():
    spec = rest_spec()
    assert stencil_margin(spec, V_REST, 1e-3) == pytest.approx(1.0 - 1e-3, rel=1e-12)
    assert stencil_margin(spec, FourVector(1e-4, 0, 0, 0), 1e-3) < 0


@pytest.mark.parametrize("mass", [1.0, 2.0])
def test_separation_constants(mass):
    spec = rest_spec(rho=0.1, mass=mass)
    x0 = FourVector(0.2, -0.1, 0.3, 0.0)
    cfg = StencilConfig(h=1e-3)
    lhs_x, lhs_v = separation_check(spec, x0, V_REST, cfg)
    m_sq = mass * mass
    assert lhs_x == pytest.approx(-m_sq, rel=1e-4)
    assert lhs_v == pytest.approx(m_sq, rel=1e-4)
    single_term = max(abs(lhs_x + m_sq), abs(lhs_v - m_sq))
    assert abs(lhs_x + lhs_v) <= 2 * single_term + 1e-12


def test_separation_check_rejects_dead_point():
    spec = ModeSpec(
        ctx_with(0.1), ParticleKinematics(mass=1.0, proper_accel=1.0), branch=Branch.NEGATIVE
    )
    with pytest.raises(ZeroDivisionError):
        separation_check(spec, ORIGIN, V_REST, StencilConfig(h=1e-3))


def test_convergence_order_near_two():
    rng = np.random.default_rng(50)
    for rho in (0.1, 1.0):
        spec, x, v = sample_interior_point(rng, ctx_with(rho), 1.0, H_SEQUENCE[0])
        slope = convergence_order(spec, x, v, H_SEQUENCE)
        assert 1.8 <= slope <= 2.2


def test_loglog_slope_validation_and_floor():
    with pytest.raises(ValueError):
        loglog_slope([1e-2, 5e-3], [1.0, 0.5])
    with pytest.raises(ValueError):
        loglog_slope([5e-3, 1e-2, 2e-2], [1.0, 2.0, 3.0])
    with pytest.raises(ResidualFloorError):
        loglog_slope([1e-2, 5e-3, 2.5e-3], [0.0, 0.0, 0.0])
    assert loglog_slope([1e-1, 1e-2, 1e-3], [1e-2, 1e-4, 1e-6]) == pytest.approx(2.0, rel=1e-12)


def test_constant_field_flagged():
    cfg_h = [1e-2, 5e-3, 2.5e-3]
    mags = [abs(dalembertian_x(lambda x, v: 4.2, ORIGIN, V_REST, StencilConfig(h=h))) for h in cfg_h]
    with pytest.raises(ResidualFloorError):
        loglog_slope(cfg_h, mags)


def test_exact_quadratic_flagged():
    # t^2 + x^2 is annihilated analytically by the signed operator and
    # CENTRAL2 is exact on quadratics; what is left is pure rounding noise
    f = lambda x, v: x.t * x.t + x.x * x.x
    x0 = FourVector(0.3, 0.7, 0.0, 0.0)
    hs = [1e-2, 5e-3, 2.5e-3]
    mags = [abs(dalembertian_x(f, x0, V_REST, StencilConfig(h=h))) for h in hs]
    with pytest.raises(ResidualFloorError):
        loglog_slope(hs, mags, noise_floor=1e-8)


def test_interior_sampler_respects_margin():
    rng = np.random.default_rng(51)
    ctx = ctx_with(0.5)
    for _ in range(20):
        spec, x, v = sample_interior_point(rng, ctx, 1.0, 4e-3, margin=0.15)
        assert stencil_margin(spec, v, 4e-3) >= 0.15
        report = residual_8d(spec, x, v, StencilConfig(h=1e-3, support_margin=0.15))
        assert not report.skipped
