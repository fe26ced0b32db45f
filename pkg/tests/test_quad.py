import math

import numpy as np
import pytest
from scipy import integrate as si
from scipy import special as sc

from tricomi.core.errors import ExtrapolationError, ParameterError, PreconditionError, QuadratureError
from tricomi.schemas.quad import EpsSchedule, QuadSpec
from tricomi.schemas.radialft import WsIntegralSpec
from tricomi.services import quad


def test_tanh_sinh_rule_is_symmetric_and_cached():
    x, lower, upper, w = quad.tanh_sinh_rule(3)
    np.testing.assert_allclose(x, -x[::-1], atol=0)
    np.testing.assert_allclose(lower, upper[::-1], rtol=1e-15)
    assert w.sum() == pytest.approx(2.0, abs=1e-14)
    assert quad.tanh_sinh_rule(3)[0] is x
    with pytest.raises(ValueError):
        x[0] = 0.0


def test_endpoint_distances_avoid_cancellation():
    x, lower, upper, _ = quad.tanh_sinh_rule(4)
    assert upper[-1] > 0.0 and upper[-1] < 1e-30
    assert lower[0] == upper[-1]


def test_inverse_square_root_singularity():
    result = quad.integrate(lambda t: t**-0.5, (0.0, 1.0))
    assert result.value == pytest.approx(2.0, abs=1e-10)
    assert result.evaluations > 0


def test_beta_integral_with_two_singular_endpoints():
    result = quad.integrate(lambda t: t ** (-2.0 / 3.0) * (1.0 - t) ** (-1.0 / 3.0), (0.0, 1.0))
    assert result.value == pytest.approx(2.0 * math.pi / math.sqrt(3.0), rel=1e-9)


def test_breakpoints_handle_a_kink():
    result = quad.integrate(lambda t: np.abs(t - 0.3), (0.0, 1.0), breakpoints=[0.3])
    assert result.value == pytest.approx(0.29, abs=1e-13)


def test_reversed_interval_changes_sign():
    forward = quad.integrate(np.exp, (0.0, 1.0))
    backward = quad.integrate(np.exp, (1.0, 0.0))
    assert backward.value == -forward.value
    assert quad.integrate(np.exp, (0.5, 0.5)).value == 0.0


def test_semi_infinite_watson_integral():
    # int_0^inf t J0(t) K0(2t) dt = 1 / (1 + 4)
    result = quad.integrate(lambda t: t * sc.j0(t) * sc.k0(2.0 * t), (0.0, math.inf))
    assert result.value == pytest.approx(0.2, rel=1e-9)


def test_lower_limit_must_be_finite():
    with pytest.raises(ParameterError):
        quad.integrate(np.exp, (-math.inf, 0.0))


def test_non_finite_integrand_raises_quadrature_error():
    with pytest.raises(QuadratureError) as excinfo:
        quad.integrate(lambda t: np.full_like(t, np.nan), (0.0, 1.0))
    assert "not finite" in str(excinfo.value)


def test_exhausted_levels_keep_partial_estimate():
    spec = QuadSpec(abs_tol=1e-14, rel_tol=1e-14, max_subdivisions=2)
    with pytest.raises(QuadratureError) as excinfo:
        quad.integrate(lambda t: np.sin(1000.0 * t), (0.0, 1.0), spec)
    assert math.isfinite(excinfo.value.partial)


def test_wynn_epsilon_accelerates_alternating_series():
    partial = np.cumsum([(-1) ** k / (k + 1) for k in range(20)])
    limit, error = quad.wynn_epsilon(partial)
    assert limit == pytest.approx(math.log(2.0), abs=1e-10)
    assert abs(partial[-1] - math.log(2.0)) > 1e-2
    assert error < 1e-8


def test_wynn_epsilon_short_sequences():
    assert quad.wynn_epsilon([1.0, 1.5]) == (1.5, 0.5)


def _schedule(order: int = 3) -> EpsSchedule:
    return EpsSchedule.geometric(0.2, 7, order)


def test_extrapolation_removes_linear_term():
    schedule = _schedule()
    samples = [(e, 3.0 + 2.0 * e) for e in schedule.eps_values]
    result = quad.extrapolate_eps_limit(samples, schedule)
    assert result.value == pytest.approx(3.0, abs=1e-13)
    assert len(result.corrections) == 3


def test_extrapolation_of_smooth_function():
    schedule = _schedule()
    samples = [(e, 1.0 / (1.0 + e * e)) for e in schedule.eps_values]
    assert quad.extrapolate_eps_limit(samples, schedule).value == pytest.approx(1.0, abs=1e-8)


def test_growing_corrections_raise():
    schedule = _schedule(order=2)
    samples = [(e, 1e6 * e**3) for e in schedule.eps_values]
    with pytest.raises(ExtrapolationError) as excinfo:
        quad.extrapolate_eps_limit(samples, schedule)
    corrections = excinfo.value.diagnostics["corrections"]
    assert corrections[-1] > corrections[-2]


def test_extrapolation_needs_schedule_points():
    schedule = _schedule()
    with pytest.raises(PreconditionError):
        quad.extrapolate_eps_limit([(0.1, 1.0)] * 7, schedule)


def test_schedule_validation():
    with pytest.raises(ValueError):
        EpsSchedule(eps_values=(0.1, 0.2, 0.05, 0.01), extrapolation_order=1)
    with pytest.raises(ValueError):
        EpsSchedule(eps_values=(0.2, 0.1), extrapolation_order=3)


@pytest.mark.parametrize("n,area", [(2, 2.0 * math.pi), (3, 4.0 * math.pi)])
def test_sphere_area(n, area):
    assert quad.sphere_integral(n, lambda omega: np.ones(len(omega))) == pytest.approx(area, rel=1e-14)


def test_sphere_second_moment():
    value = quad.sphere_integral(3, lambda omega: omega[:, 2] ** 2)
    assert value == pytest.approx(4.0 * math.pi / 3.0, rel=1e-13)


def test_sphere_dimension_checked():
    with pytest.raises(ParameterError):
        quad.sphere_integral(4, lambda omega: np.ones(len(omega)))


WS = WsIntegralSpec(lam=0.0, mu=0.0, nu=0.0, a=1.0, b=2.0)


def test_bessel_tail_needs_distinct_radii():
    with pytest.raises(PreconditionError):
        quad.integrate_bessel_tail(WsIntegralSpec(lam=0.0, mu=0.0, nu=0.0, a=1.0, b=1.0), 0.1)
    with pytest.raises(PreconditionError):
        quad.integrate_bessel_tail(WS, -0.1)


def test_bessel_tail_matches_direct_quadrature_for_strong_damping():
    direct = quad.integrate(lambda t: np.exp(-t) * sc.j0(t) * sc.j0(2.0 * t), (0.0, math.inf))
    assert quad.integrate_bessel_tail(WS, 1.0).value == pytest.approx(direct.value, abs=1e-9)


def test_bessel_tail_matches_fine_simpson_rule():
    t = np.linspace(0.0, 2000.0, 400_001)
    reference = si.simpson(np.exp(-0.1 * t) * sc.j0(t) * sc.j0(2.0 * t), x=t)
    assert quad.integrate_bessel_tail(WS, 0.1).value == pytest.approx(reference, rel=1e-7)


def test_bessel_tail_resolves_slow_beats_between_close_radii():
    # a + b and |a - b| differ by a factor of 21; each cosine component gets its own zeros
    t = np.linspace(0.0, 400.0, 200_001)
    reference = si.simpson(np.exp(-0.1 * t) * sc.j0(t) * sc.j0(1.1 * t), x=t)
    ws = WsIntegralSpec(lam=0.0, mu=0.0, nu=0.0, a=1.0, b=1.1)
    assert quad.integrate_bessel_tail(ws, 0.1).value == pytest.approx(reference, rel=1e-7)


def test_bessel_tail_is_deterministic():
    first = quad.integrate_bessel_tail(WS, 0.05)
    second = quad.integrate_bessel_tail(WS, 0.05)
    assert first.value == second.value
    assert first.subdivisions > 0
