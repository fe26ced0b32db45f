# tricomi/services/radialft.py
"""Radial inverse Fourier transforms in R^n and Weber-Schafheitlin limits.

Convention: G(x) = (2 pi)^{-n} int e^{i<x, xi>} g(|xi|) dxi, which for a
radial profile reduces to

    G(r) = (2 pi)^{-n/2} r^{1 - n/2} int_0^inf rho^{n/2} J_{n/2-1}(r rho) g(rho) d rho.

Closed forms are written for unit scale; a profile g(scale |xi|) transforms
to scale^{-n} G(r / scale).
"""
import logging
import math

import numpy as np

from tricomi.core.config import settings
from tricomi.core.errors import DomainError, SingularLocusError
from tricomi.schemas.common import RadialKind, ToleranceMode
from tricomi.schemas.quad import EpsSchedule, QuadSpec
from tricomi.schemas.radialft import NumericTransform, RadialFtSpec, WsIntegralSpec
from tricomi.schemas.verify import VerificationReport
from tricomi.services import quad
from tricomi.services.hypergeom import hyp2f1_value
from tricomi.services.specfun import bessel_j, bessel_k_integral, bessel_k_scaled, gamma, rgamma

log = logging.getLogger(__name__)

_SIN_HALF_PI = (0.0, 1.0, 0.0, -1.0) # sin(n pi / 2), n mod 4
_COS_HALF_PI = (1.0, 0.0, -1.0, 0.0)


def _sin_half(n: int) -> float:
    return _SIN_HALF_PI[n % 4]


def _cos_half(n: int) -> float:
    return _COS_HALF_PI[n % 4]


def tail_quad_spec() -> QuadSpec:
    """Tolerances for the oscillatory I_eps evaluations; looser than the smooth default."""
    return QuadSpec(abs_tol=1e-11, rel_tol=1e-9, max_subdivisions=settings.QUAD_MAX_LEVELS)


# --- closed forms ---
def _j_constant(n: int, nu: float) -> float:
    return 2.0**nu * gamma(0.5 * n + nu) / math.pi ** (0.5 * n + 1.0)


def _closed_unit(kind: RadialKind, n: int, nu: float, rho: float) -> float:
    half_n = 0.5 * n
    if kind == RadialKind.K_NU:
        return 2.0 ** (nu - 1.0) * gamma(half_n + nu) * math.pi**-half_n * (1.0 + rho * rho) ** (-half_n - nu)
    inside = rho < 1.0
    gap = abs(1.0 - rho * rho)
    if kind == RadialKind.JNU_POW_PLUS:
        sign = _sin_half(n) if inside else -math.sin(nu * math.pi)
        return sign * _j_constant(n, nu) * gap ** (-half_n - nu)
    if kind == RadialKind.JNU_POW_MINUS:
        if not inside:
            return 0.0
        return gap ** (nu - half_n) * 2.0**-nu * math.pi**-half_n * rgamma(nu - half_n + 1.0)
    if kind == RadialKind.JMINUS_NU_POW_PLUS:
        if not inside:
            return 0.0
        # sin((nu + n/2) pi) expanded so the n/2 part stays exact
        sine = math.sin(nu * math.pi) * _cos_half(n) + math.cos(nu * math.pi) * _sin_half(n)
        return sine * _j_constant(n, nu) * gap ** (-half_n - nu)
    # N-kind
    sign = -_cos_half(n) if inside else -math.cos(nu * math.pi)
    return sign * _j_constant(n, nu) * gap ** (-half_n - nu)


def _check_radius(spec: RadialFtSpec, r: float) -> None:
    if not (math.isfinite(r) and r >= 0):
        raise DomainError(f"radius must be finite and >= 0, got {r}")
    if spec.has_jump and r == spec.scale:
        raise SingularLocusError(f"{spec.kind.value} transform is singular at |x| = scale = {spec.scale:g}")


def ift_closed(spec: RadialFtSpec, r: float) -> float:
    """Closed-form inverse transform of g(scale |xi|) at |x| = r."""
    _check_radius(spec, r)
    return spec.scale**-spec.n * _closed_unit(spec.kind, spec.n, spec.nu, r / spec.scale)


def ift_closed_reflected(spec: RadialFtSpec, r: float) -> float:
    """|xi|^nu J_{-nu} kind through the reciprocal-Gamma form of its interior branch."""
    if spec.kind != RadialKind.JMINUS_NU_POW_PLUS:
        raise DomainError("the reflected route exists only for the J_{-nu} kind")
    _check_radius(spec, r)
    rho = r / spec.scale
    if rho > 1.0:
        return 0.0
    half_n = 0.5 * spec.n
    value = (1.0 - rho * rho) ** (-spec.nu - half_n) * 2.0**spec.nu * math.pi**-half_n * rgamma(1.0 - spec.nu - half_n)
    return spec.scale**-spec.n * value


# --- Weber-Schafheitlin limits ---
def _ws_outer(ws: WsIntegralSpec) -> float:
    """b < a branch."""
    lam, mu, nu, a, b = ws.lam, ws.mu, ws.nu, ws.a, ws.b
    coefficient = (b**nu * gamma(ws.alpha) * rgamma(nu + 1.0) * rgamma(0.5 * (lam + mu - nu + 1.0))
                   / (2.0**lam * a ** (nu - lam + 1.0)))
    if coefficient == 0.0:
        return 0.0
    return coefficient * hyp2f1_value(ws.alpha, ws.beta, ws.gamma_c, (b / a) ** 2)


def _ws_inner(ws: WsIntegralSpec) -> float:
    """a < b branch."""
    lam, mu, nu, a, b = ws.lam, ws.mu, ws.nu, ws.a, ws.b
    coefficient = (a**mu * gamma(ws.alpha) * rgamma(mu + 1.0) * rgamma(0.5 * (lam + nu - mu + 1.0))
                   / (2.0**lam * b ** (mu - lam + 1.0)))
    if coefficient == 0.0:
        return 0.0
    return coefficient * hyp2f1_value(ws.alpha, 0.5 * (mu - lam - nu + 1.0), mu + 1.0, (a / b) ** 2)


def ws_limit_closed(ws: WsIntegralSpec) -> float:
    """lim_{eps -> 0} I_eps(a, b) from the hypergeometric closed forms.

    A reciprocal Gamma factor at a pole makes the branch exactly zero.
    """
    if ws.a == ws.b:
        raise SingularLocusError("the limit is discontinuous at a = b")
    return _ws_outer(ws) if ws.b < ws.a else _ws_inner(ws)


def ws_limit_numeric(ws: WsIntegralSpec, schedule: EpsSchedule | None = None,
                     qspec: QuadSpec | None = None) -> NumericTransform:
    """Abel limit of I_eps by tail acceleration on an eps ladder and polynomial extrapolation."""
    schedule = schedule or quad.default_eps_schedule()
    qspec = qspec or tail_quad_spec()
    samples = [quad.integrate_bessel_tail(ws, eps, qspec).value for eps in schedule.eps_values]
    limit = quad.extrapolate_eps_limit(list(zip(schedule.eps_values, samples)), schedule)
    return NumericTransform(value=limit.value, error=limit.error,
                            eps_values=list(schedule.eps_values), samples=samples)


# --- numeric transforms ---
def _k_profile(nu: float, x: np.ndarray) -> np.ndarray:
    """x^nu K_nu(x) for x > 0."""
    if nu == 0.0:
        return np.asarray(bessel_k_integral(0.0, x))
    return x ** (nu - abs(nu)) * np.asarray(bessel_k_scaled(nu, x))


def _k_numeric(spec: RadialFtSpec, r: float, qspec: QuadSpec) -> NumericTransform:
    mu = 0.5 * spec.n - 1.0

    def integrand(rho: np.ndarray) -> np.ndarray:
        return rho ** (0.5 * spec.n) * np.asarray(bessel_j(mu, r * rho)) * _k_profile(spec.nu, spec.scale * rho)

    result = quad.integrate(integrand, (0.0, math.inf), qspec, panel_width=1.0 / spec.scale)
    prefactor = (2.0 * math.pi) ** (-0.5 * spec.n) * r ** (1.0 - 0.5 * spec.n)
    return NumericTransform(value=prefactor * result.value, error=prefactor * result.error)


def _ws_for(spec: RadialFtSpec, r: float, kind: RadialKind) -> tuple[float, WsIntegralSpec]:
    """Coefficient and I_eps parameters with rho^{n/2} J_{n/2-1}(r rho) g(s rho) = coefficient * integrand."""
    half_n, nu, s = 0.5 * spec.n, spec.nu, spec.scale
    mu = half_n - 1.0
    if kind == RadialKind.JNU_POW_PLUS:
        return s**nu, WsIntegralSpec(lam=-(half_n + nu), mu=mu, nu=nu, a=r, b=s)
    if kind == RadialKind.JNU_POW_MINUS:
        return s**-nu, WsIntegralSpec(lam=-(half_n - nu), mu=mu, nu=nu, a=r, b=s)
    return s**nu, WsIntegralSpec(lam=-(half_n + nu), mu=mu, nu=-nu, a=r, b=s)


def ift_numeric_detailed(spec: RadialFtSpec, r: float, schedule: EpsSchedule | None = None,
                         qspec: QuadSpec | None = None, margin: float | None = None) -> NumericTransform:
    """Inverse transform by quadrature: direct for the K-kind, eps ladder plus extrapolation otherwise."""
    if not (math.isfinite(r) and r > 0):
        raise DomainError(f"numeric transform needs r > 0, got {r}")
    if spec.kind == RadialKind.K_NU:
        return _k_numeric(spec, r, qspec or quad.default_quad_spec())

    margin = settings.SINGULAR_MARGIN_FRACTION * spec.scale if margin is None else margin
    if abs(r - spec.scale) < margin:
        raise SingularLocusError(f"r = {r:g} is within {margin:g} of the jump at |x| = {spec.scale:g}")
    schedule = schedule or quad.default_eps_schedule()
    qspec = qspec or tail_quad_spec()

    if spec.kind == RadialKind.N_NU:
        cp, plus = _ws_for(spec, r, RadialKind.JNU_POW_PLUS)
        cm, minus = _ws_for(spec, r, RadialKind.JMINUS_NU_POW_PLUS)
        c, s = math.cos(spec.nu * math.pi), math.sin(spec.nu * math.pi)

        def sample(eps: float) -> float:
            return (c * cp * quad.integrate_bessel_tail(plus, eps, qspec).value
                    - cm * quad.integrate_bessel_tail(minus, eps, qspec).value) / s
    else:
        coefficient, ws = _ws_for(spec, r, spec.kind)

        def sample(eps: float) -> float:
            return coefficient * quad.integrate_bessel_tail(ws, eps, qspec).value

    samples = [sample(eps) for eps in schedule.eps_values]
    limit = quad.extrapolate_eps_limit(list(zip(schedule.eps_values, samples)), schedule)
    prefactor = (2.0 * math.pi) ** (-0.5 * spec.n) * r ** (1.0 - 0.5 * spec.n)
    log.debug(f"{spec.kind.value} n={spec.n} nu={spec.nu:g} scale={spec.scale:g} r={r:g}: "
              f"{prefactor * limit.value:.12g} (corrections {limit.corrections})")
    return NumericTransform(value=prefactor * limit.value, error=prefactor * limit.error,
                            eps_values=list(schedule.eps_values), samples=[prefactor * v for v in samples])


def ift_numeric(spec: RadialFtSpec, r: float, schedule: EpsSchedule | None = None,
                qspec: QuadSpec | None = None, margin: float | None = None) -> float:
    return ift_numeric_detailed(spec, r, schedule, qspec, margin).value


# --- sphere reduction ---
def sphere_reduction_check(n: int, r: float, x_norm: float) -> VerificationReport:
    """Plane wave averaged over S^{n-1} against (2 pi)^{n/2} |r x|^{1-n/2} J_{n/2-1}(r |x|)."""
    z = r * x_norm
    if z == 0.0:
        target = 2.0 * math.pi ** (0.5 * n) / gamma(0.5 * n)
    else:
        target = (2.0 * math.pi) ** (0.5 * n) * z ** (1.0 - 0.5 * n) * bessel_j(0.5 * n - 1.0, z)
    computed = quad.sphere_integral(n, lambda omega: np.cos(z * omega[:, 0]))
    tol = 1e-10 if n == 2 else 1e-8
    return VerificationReport.from_values(f"sphere-reduction n={n} r|x|={z:g}", target, computed, tol,
                                          ToleranceMode.ABS, n=n, r=r, x_norm=x_norm)
