import math

import mpmath
import numpy as np
import pytest
from scipy import special as sc

from tricomi.core.errors import DomainError, OrderError, PoleError
from tricomi.services import specfun

mpmath.mp.dps = 50

THIRD = 1.0 / 3.0


@pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 7.3, -0.5, -1.5, 4.0 / 3.0 - 2, -2.7])
def test_gamma_matches_scipy(x):
    assert specfun.gamma(x) == pytest.approx(sc.gamma(x), rel=1e-14)


def test_gamma_negative_uses_reflection():
    # Gamma(4/3 - 2) = Gamma(1/3) / ((1/3 - 1)(1/3 - 2) ... ) rearranged
    expected = float(mpmath.gamma(mpmath.mpf(4) / 3 - 2))
    assert specfun.gamma(4.0 / 3.0 - 2) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0])
def test_gamma_poles_raise(x):
    with pytest.raises(PoleError):
        specfun.gamma(x)


@pytest.mark.parametrize("x", [0.0, -1.0, -5.0])
def test_rgamma_vanishes_at_poles(x):
    assert specfun.rgamma(x) == 0.0


def test_rgamma_is_reciprocal():
    assert specfun.rgamma(-2.5) == pytest.approx(1.0 / sc.gamma(-2.5), rel=1e-14)


@pytest.mark.parametrize("nu", [-THIRD, 0.0, THIRD, 0.5, 2.5])
def test_bessel_j_against_scipy(nu):
    x = np.array([0.5, 3.0, 11.9, 12.5, 30.0])
    np.testing.assert_allclose(specfun.bessel_j(nu, x), sc.jv(nu, x), rtol=1e-10, atol=1e-10)


def test_bessel_j_extended_precision_oracle():
    expected = float(mpmath.besselj(mpmath.mpf(1) / 3, 5))
    assert specfun.bessel_j(THIRD, 5.0) == pytest.approx(expected, rel=1e-12)


def test_bessel_j_at_zero():
    assert specfun.bessel_j(0.0, 0.0) == 1.0
    assert specfun.bessel_j(THIRD, 0.0) == 0.0
    with pytest.raises(DomainError):
        specfun.bessel_j(-THIRD, 0.0)


def test_bessel_j_scaled_leading_coefficients():
    # t^{1/3} J_{-1/3}(t) -> 2^{1/3} / Gamma(2/3) and t^{1/3} J_{1/3}(t) ~ t^{2/3} / (2^{1/3} Gamma(4/3))
    assert specfun.bessel_j_scaled(-THIRD, 0.0) == pytest.approx(2.0**THIRD / sc.gamma(2.0 / 3.0), rel=1e-14)
    t = 1e-6
    assert specfun.bessel_j_scaled(THIRD, t) == pytest.approx(t ** (2.0 / 3.0) / (2.0**THIRD * sc.gamma(4.0 / 3.0)),
                                                              rel=1e-9)


@pytest.mark.parametrize("nu", [-THIRD, THIRD, 1.0])
def test_bessel_i_against_scipy(nu):
    x = np.array([0.2, 2.0, 8.0, 20.0])
    np.testing.assert_allclose(specfun.bessel_i(nu, x), sc.iv(nu, x), rtol=1e-10)


def test_bessel_i_extended_precision_oracle():
    expected = float(mpmath.besseli(-mpmath.mpf(1) / 3, 2))
    assert specfun.bessel_i(-THIRD, 2.0) == pytest.approx(expected, rel=1e-12)


def test_bessel_i_refuses_overflow():
    with pytest.raises(DomainError):
        specfun.bessel_i(THIRD, 800.0)


@pytest.mark.parametrize("nu", [THIRD, 2.0 / 3.0, 0.2])
def test_bessel_k_against_scipy_across_regimes(nu):
    x = np.array([0.1, 1.0, 2.5, 7.0, 15.0, 40.0])
    np.testing.assert_allclose(specfun.bessel_k(nu, x), sc.kv(nu, x), rtol=1e-9)


def test_bessel_k_extended_precision_oracle():
    expected = float(mpmath.besselk(mpmath.mpf(1) / 3, 1))
    assert specfun.bessel_k(THIRD, 1.0) == pytest.approx(expected, rel=1e-12)


def test_bessel_k_is_even_in_order():
    x = np.logspace(-3, math.log10(30.0), 40)
    plus = np.asarray(specfun.bessel_k(THIRD, x))
    minus = np.asarray(specfun.bessel_k(-THIRD, x))
    assert np.all(np.abs(plus - minus) <= 1e-13 * np.maximum(1.0, plus))
    np.testing.assert_allclose(plus, sc.kv(THIRD, x), rtol=1e-9)


def test_bessel_k_large_argument_normalization():
    x = 30.0
    normalized = math.sqrt(x) * math.exp(x) * specfun.bessel_k(THIRD, x)
    assert normalized == pytest.approx(math.sqrt(x) * sc.kve(THIRD, x), rel=1e-10)
    # first Hankel correction (4 nu^2 - 1) / (8 x)
    assert normalized == pytest.approx(math.sqrt(0.5 * math.pi) * (1.0 - 5.0 / 9.0 / (8.0 * x)), rel=1e-4)
    assert abs(normalized - math.sqrt(0.5 * math.pi)) < abs(
        math.sqrt(10.0) * math.exp(10.0) * specfun.bessel_k(THIRD, 10.0) - math.sqrt(0.5 * math.pi))


def test_bessel_k_integer_order_rejected():
    with pytest.raises(OrderError):
        specfun.bessel_k(1.0, 1.0)


def test_bessel_k_integral_handles_order_zero():
    x = np.array([0.3, 1.0, 4.0])
    np.testing.assert_allclose(specfun.bessel_k_integral(0.0, x), sc.k0(x), rtol=1e-12)


def test_bessel_k_scaled_limit_at_zero():
    assert specfun.bessel_k_scaled(THIRD, 0.0) == pytest.approx(2.0 ** (THIRD - 1) * sc.gamma(THIRD), rel=1e-13)


@pytest.mark.parametrize("nu", [-THIRD, THIRD, 0.25])
def test_neumann_against_scipy(nu):
    x = np.array([0.4, 3.0, 9.0, 25.0])
    np.testing.assert_allclose(specfun.neumann_n(nu, x), sc.yv(nu, x), rtol=1e-9, atol=1e-11)


def test_neumann_integer_order_rejected():
    with pytest.raises(OrderError):
        specfun.neumann_n(0.0, 1.0)


def test_modulus_phase_reproduces_j():
    modulus, phase = specfun.bessel_j_modulus_phase(THIRD, 20.0)
    assert modulus * math.cos(phase) == pytest.approx(sc.jv(THIRD, 20.0), abs=1e-13)


def test_airy_against_scipy():
    z = np.array([-5.0, -2.0, -0.5, 0.0, 0.5, 2.0, 5.0])
    ai, aip, bi, bip = sc.airy(z)
    np.testing.assert_allclose(specfun.airy_ai(z), ai, rtol=1e-10, atol=1e-13)
    np.testing.assert_allclose(specfun.airy_ai_prime(z), aip, rtol=1e-10, atol=1e-13)
    np.testing.assert_allclose(specfun.airy_bi(z), bi, rtol=1e-10, atol=1e-13)
    np.testing.assert_allclose(specfun.airy_bi_prime(z), bip, rtol=1e-10, atol=1e-13)


def test_airy_extended_precision_oracles():
    assert specfun.airy_ai(1.0) == pytest.approx(float(mpmath.airyai(1)), rel=1e-12)
    assert specfun.airy_bi(-2.0) == pytest.approx(float(mpmath.airybi(-2)), rel=1e-12)


def test_airy_constants_at_zero():
    assert specfun.airy_ai(0.0) == pytest.approx(3.0 ** (-2.0 / 3.0) / sc.gamma(2.0 / 3.0), abs=1e-12)
    assert specfun.airy_bi_prime(0.0) == pytest.approx(3.0 ** (-5.0 / 6.0) / sc.gamma(4.0 / 3.0), abs=1e-12)


@pytest.mark.parametrize("z", [-2.0, -1.0, 0.0, 1.0, 2.0])
def test_airy_wronskian(z):
    w = specfun.airy_ai(z) * specfun.airy_bi_prime(z) - specfun.airy_ai_prime(z) * specfun.airy_bi(z)
    assert w == pytest.approx(1.0 / math.pi, abs=1e-10)


def test_scalar_in_float_out_and_array_in_array_out():
    assert isinstance(specfun.bessel_j(THIRD, 1.0), float)
    out = specfun.bessel_j(THIRD, np.array([1.0, 2.0]))
    assert isinstance(out, np.ndarray) and out.shape == (2,)


def test_non_finite_arguments_raise():
    with pytest.raises(DomainError):
        specfun.bessel_j(THIRD, float("nan"))
    with pytest.raises(DomainError):
        specfun.airy_ai(float("inf"))
