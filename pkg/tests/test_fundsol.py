import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import special as sc

from tricomi.core.errors import DomainError, ParityError, SingularLocusError
from tricomi.schemas.common import Construction, FundamentalSolution, Quantity, Region
from tricomi.schemas.fundsol import SpacetimePoint, SubstitutedTime
from tricomi.services import fundsol

ALL_CONSTRUCTIONS = list(Construction)
P = SpacetimePoint.on_ray


def test_point_caches_discriminant():
    p = SpacetimePoint(x=(1.0, 2.0), y=-1.0)
    assert p.discriminant == 9.0 * 5.0 - 4.0
    assert p.n == 2
    assert p.radius == pytest.approx(math.sqrt(5.0))


def test_point_rejects_non_finite_coordinates():
    with pytest.raises(ValidationError):
        SpacetimePoint(x=(float("nan"),), y=0.0)


@pytest.mark.parametrize("radius,y,region", [
    (0.0, 1.0, Region.DPLUS),
    (0.1, -1.0, Region.DMINUS),
    (2.0 / 3.0, -1.0, Region.CONE),
    (0.0, 0.0, Region.CONE),
    (1.0, 0.0, Region.DPLUS),
])
def test_classify(radius, y, region):
    assert fundsol.classify(P(1, radius, y)) == region


def test_cone_tolerance_is_respected():
    p = P(1, 0.0, -1e-4)
    assert fundsol.classify(p) == Region.CONE
    assert fundsol.classify(p, cone_tol=0.0) == Region.DMINUS
    with pytest.raises(DomainError):
        fundsol.classify(p, cone_tol=-1.0)


def test_f_minus_example_in_one_dimension():
    expected = 3.0 * sc.gamma(4.0 / 3.0) / (2.0 ** (2.0 / 3.0) * math.sqrt(math.pi) * sc.gamma(5.0 / 6.0)) * 4.0 ** (-1.0 / 6.0)
    assert fundsol.f_minus(1, P(1, 0.0, -1.0)) == pytest.approx(expected, rel=1e-14)


def test_f_minus_example_in_two_dimensions():
    expected = 9.0 * sc.gamma(4.0 / 3.0) / (2.0 ** (2.0 / 3.0) * math.pi * sc.gamma(1.0 / 3.0)) * 4.0 ** (-2.0 / 3.0)
    assert fundsol.f_minus(2, P(2, 0.0, -1.0)) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_f_minus_vanishes_in_dplus(n):
    assert fundsol.f_minus(n, P(n, 0.5, 0.2)) == 0.0


@pytest.mark.parametrize("kind", [fundsol.f_minus, fundsol.f_plus, fundsol.f_sharp])
def test_cone_is_singular(kind):
    with pytest.raises(SingularLocusError):
        kind(1, P(1, 2.0 / 3.0, -1.0))


def test_dimension_mismatch_rejected():
    with pytest.raises(DomainError):
        fundsol.f_minus(2, P(1, 0.0, -1.0))


@pytest.mark.parametrize("n", [1, 3, 5])
def test_f_plus_equals_f_sharp_in_odd_dimensions(n):
    for p in (P(n, 0.3, 0.5), P(n, 0.1, -1.0)):
        assert fundsol.f_plus(n, p) == fundsol.f_sharp(n, p)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_f_sharp_vanishes_below_in_odd_dimensions(n):
    assert fundsol.f_sharp(n, P(n, 0.1, -1.0)) == 0.0


def test_f_sharp_lives_on_both_sides_in_two_dimensions():
    assert fundsol.f_sharp(2, P(2, 0.1, -1.0)) > 0.0
    assert fundsol.f_sharp(2, P(2, 0.5, 1.0)) < 0.0


@pytest.mark.parametrize("n", [2, 4, 6])
def test_f_plus_vanishes_below_in_even_dimensions(n):
    p = P(n, 0.1, -1.0)
    assert fundsol.f_plus(n, p) == pytest.approx(0.0, abs=1e-12 * abs(fundsol.f_minus(n, p)))


def test_f_plus_example_in_two_dimensions():
    expected = -3.0 * 2.0 ** (-2.0 / 3.0) / math.pi * 6.25 ** (-2.0 / 3.0)
    assert fundsol.f_plus(2, SpacetimePoint(x=(0.5, 0.0), y=1.0)) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_ab_constants_cancel(n):
    ab = fundsol.ab_constants(n)
    assert 3.0 * ab.a - 2.0 * ab.b == pytest.approx(0.0, abs=1e-12 * abs(ab.b))
    assert ab.b == pytest.approx(ab.b_reflected, rel=1e-12)


def test_ab_constants_in_two_dimensions():
    ab = fundsol.ab_constants(2)
    assert ab.a == pytest.approx(2.0 ** (1.0 / 3.0) / math.pi, rel=1e-14)
    assert ab.a == pytest.approx(fundsol.sharp_constants(2)[1], rel=1e-14)


@pytest.mark.parametrize("n", [1, 3, 0])
def test_ab_constants_need_even_dimension(n):
    with pytest.raises(ParityError):
        fundsol.ab_constants(n)


def test_dimension_constants():
    constants = fundsol.dimension_constants(3)
    assert constants.homogeneity_degree == -7.0
    assert constants.sharp_minus == 0.0
    assert constants.ab is None
    assert fundsol.dimension_constants(2).ab is not None


@pytest.mark.parametrize("kind", list(FundamentalSolution))
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("t", [0.5, 2.0])
def test_dilation_covariance(kind, n, t):
    solution = getattr(fundsol, kind.value)
    for p in (P(n, 0.1, -1.0), P(n, 0.5, 0.4)):
        scaled = solution(n, fundsol.dilate(p, t))
        expected = t ** fundsol.homogeneity_degree(n) * solution(n, p)
        assert scaled == pytest.approx(expected, rel=1e-12, abs=0)


def test_fundamental_values_vectorized():
    delta = np.array([-2.0, 3.0])
    values = fundsol.fundamental_values(FundamentalSolution.F_MINUS, 1, delta)
    assert values.shape == (2,)
    assert values[1] == 0.0
    with pytest.raises(SingularLocusError):
        fundsol.fundamental_values(FundamentalSolution.F_MINUS, 1, np.array([1.0, 0.0]))


@pytest.mark.parametrize("kind", list(FundamentalSolution))
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("x,y", [(0.4, -0.5), (0.5, 0.4), (1.2, -0.6)])
def test_tricomi_residual_vanishes_off_the_cone(kind, n, x, y):
    p = P(n, x, y)
    spatial, temporal = fundsol.tricomi_terms_fd(kind, n, p, 1e-3)
    scale = max(abs(spatial), abs(temporal), 1e-300)
    assert abs(spatial + temporal) <= 1e-6 * scale or (spatial == 0.0 and temporal == 0.0)


def test_evaluate_reports_labels():
    result = fundsol.evaluate(Quantity.REGION, 2, P(2, 0.0, 1.0))
    assert result.value == "DPlus"
    result = fundsol.evaluate(Quantity.DISCRIMINANT, 1, P(1, 1.0, -1.0))
    assert result.value == 5.0
    assert result.region == Region.DPLUS
    assert fundsol.evaluate(Quantity.REGION, 1, P(1, 2.0 / 3.0, -1.0)).value == "Cone"


@pytest.mark.parametrize("y,s,t", [(0.0, 0.0, 0.0), (1.0, 2.0 / 3.0, 0.0), (-1.0, 0.0, 2.0 / 3.0)])
def test_substituted_time(y, s, t):
    assert fundsol.substituted_time(y) == SubstitutedTime(s=s, t=t)


@pytest.mark.parametrize("construction", ALL_CONSTRUCTIONS)
@pytest.mark.parametrize("xi", [0.5, 1.0, 3.0])
def test_spectral_green_has_unit_slope_jump(construction, xi):
    jump = fundsol.spectral_jump(fundsol.make_spectral_green(construction), xi)
    assert jump.value_gap <= 1e-8
    assert jump.slope_jump == pytest.approx(1.0, abs=1e-6)


def test_two_sided_airy_jump_at_offset_source():
    g = fundsol.make_spectral_green(Construction.AIRY_TWO_SIDED, b_offset=-0.7)
    jump = fundsol.spectral_jump(g, 1.3)
    assert jump.value_gap <= 1e-8
    assert jump.slope_jump == pytest.approx(1.0, abs=1e-6)


def test_only_airy_construction_takes_an_offset():
    with pytest.raises(ValidationError):
        fundsol.make_spectral_green(Construction.MINUS_ONLY, b_offset=0.5)


def test_minus_only_is_supported_below():
    g = fundsol.make_spectral_green(Construction.MINUS_ONLY)
    values = fundsol.spectral_green(g, 1.0, np.array([0.0, 0.5, 2.0]))
    np.testing.assert_array_equal(values, 0.0)
    assert fundsol.spectral_green(g, 1.0, -1e-3) == pytest.approx(1e-3, rel=1e-5)


@pytest.mark.parametrize("construction", ALL_CONSTRUCTIONS)
@pytest.mark.parametrize("y", [-1.5, -0.4, 0.4, 1.5])
def test_spectral_green_solves_the_ode(construction, y):
    g = fundsol.make_spectral_green(construction)
    if construction == Construction.MINUS_ONLY and y > 0:
        assert fundsol.spectral_ode_residual(g, 1.0, y) == 0.0
    else:
        assert fundsol.spectral_ode_residual(g, 1.0, y) <= 1e-6


def test_spectral_green_needs_positive_frequency():
    with pytest.raises(DomainError):
        fundsol.spectral_green(fundsol.make_spectral_green(Construction.PLUS_KN), 0.0, 1.0)


@pytest.mark.parametrize("xi", [0.5, 1.0, 3.0])
@pytest.mark.parametrize("y", [-1.0, 0.0, 0.8])
def test_airy_pair_wronskian(xi, y):
    assert fundsol.airy_pair_wronskian(xi, y) == pytest.approx(-1.0, abs=1e-10)
