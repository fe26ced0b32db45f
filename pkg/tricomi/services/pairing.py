# tricomi/services/pairing.py
"""Distributional pairing <F, P phi> against compactly supported bumps.

The bump is centered on the source's spatial location, so P phi is radial in
x - a and the pairing reduces to a double integral over (rho, y), rho = |x - a|.
The inner rho-integral is cut where it meets the cone, rho_c(y) =
(2/3)(-y)^{3/2}, and both sides use the tanh-sinh rule, which absorbs the
|Delta|^{1/3 - n/2} endpoint singularity. Near the cone Delta is rebuilt from
the exact distance to the endpoint rather than from 9 rho^2 + 4 y^3.
"""
import logging
import math

import numpy as np
from scipy.optimize import brentq

from tricomi.core.config import settings
from tricomi.core.errors import ParameterError, PreconditionError, QuadratureError
from tricomi.schemas.common import BumpProfile, FundamentalSolution, ToleranceMode
from tricomi.schemas.quad import QuadResult, QuadSpec
from tricomi.schemas.verify import BumpFunction, VerificationReport
from tricomi.services.fundsol import fundamental_values
from tricomi.services.quad import tanh_sinh_rule
from tricomi.services.specfun import gamma

log = logging.getLogger(__name__)

PAIRING_DIMENSIONS = (1, 2)
PAIRING_DIMENSION_NOTE = (
    "Delta pairing runs for n = 1 and n = 2 only. For n = 3 the kernel grows like |Delta|^(-7/6) "
    "at the cone, which is not locally integrable, so the pairing has no value without a regularization."
)

_FIRST_LEVEL = 3
_CROSSING_SAMPLES = 64
_PAIRING_TOL = {FundamentalSolution.F_MINUS: 5e-3, FundamentalSolution.F_PLUS: 5e-3,
                FundamentalSolution.F_SHARP: 1e-2}


# --- bump profiles ---
def profile_derivatives(profile: BumpProfile, q: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """g(q), g'(q), g''(q) for q = |u|^2; all vanish for q >= 1."""
    q = np.asarray(q, dtype=float)
    inside = q < 1.0
    m = np.where(inside, 1.0 - q, 1.0)
    if profile == BumpProfile.POLYNOMIAL:
        g, g1, g2 = m**4, -4.0 * m**3, 12.0 * m**2
    else:
        g = np.exp(1.0 - 1.0 / m)
        g1 = -g / m**2
        g2 = g * (1.0 / m**4 - 2.0 / m**3)
    zero = np.zeros_like(q)
    return np.where(inside, g, zero), np.where(inside, g1, zero), np.where(inside, g2, zero)


def bump_value(phi: BumpFunction, points) -> np.ndarray | float:
    pts = np.asarray(points, dtype=float)
    u = (pts - np.array(phi.center)) / phi.radius
    g, _, _ = profile_derivatives(phi.profile, np.sum(u * u, axis=-1))
    return float(g) if g.ndim == 0 else g


def apply_tricomi(phi: BumpFunction, p) -> np.ndarray | float:
    """(y Laplace_x phi + phi_yy) at p = (x_1, ..., x_n, y); broadcasts over leading axes."""
    pts = np.asarray(p, dtype=float)
    if pts.shape[-1] != phi.n + 1:
        raise ParameterError(f"points need {phi.n + 1} coordinates, got {pts.shape[-1]}")
    u = (pts - np.array(phi.center)) / phi.radius
    _, g1, g2 = profile_derivatives(phi.profile, np.sum(u * u, axis=-1))
    second = (4.0 * u * u * g2[..., None] + 2.0 * g1[..., None]) / phi.radius**2
    value = pts[..., -1] * np.sum(second[..., :-1], axis=-1) + second[..., -1]
    return float(value) if value.ndim == 0 else value


# --- geometry of the reduced domain ---
def _cone_radius(y):
    return 2.0 / 3.0 * np.power(np.maximum(-np.asarray(y, dtype=float), 0.0), 1.5)


def _bump_width(phi: BumpFunction, y):
    cy = phi.center[-1]
    return np.sqrt(np.maximum(phi.radius**2 - (np.asarray(y, dtype=float) - cy) ** 2, 0.0))


def outer_breakpoints(phi: BumpFunction) -> list[float]:
    """y-values where the inner integration domain changes shape."""
    cy, radius = phi.center[-1], phi.radius
    lo, hi = cy - radius, cy + radius
    cuts = {lo, hi}
    if lo < 0.0 < hi:
        cuts.add(0.0)
    top = min(0.0, hi)
    if lo < top:
        gap = lambda y: float(_cone_radius(y) - _bump_width(phi, y))  # noqa: E731
        grid = np.linspace(lo, top, _CROSSING_SAMPLES + 1)
        values = [gap(y) for y in grid]
        for y0, y1, v0, v1 in zip(grid, grid[1:], values, values[1:]):
            if v0 * v1 < 0:
                cuts.add(brentq(gap, y0, y1, xtol=1e-15, rtol=4 * np.finfo(float).eps))
    return sorted(cuts)


# --- tensor tanh-sinh evaluation ---
def _nodes(lo, hi, level: int):
    """Nodes of [lo, hi] (broadcast over leading axes) with exact distances to both ends."""
    x, dist_lower, dist_upper, w = tanh_sinh_rule(level)
    lo = np.asarray(lo, dtype=float)[..., None]
    hi = np.asarray(hi, dtype=float)[..., None]
    half = 0.5 * (hi - lo)
    from_lo = half * dist_lower
    from_hi = half * dist_upper
    nodes = np.where(x < 0, lo + from_lo, hi - from_hi)
    valid = (half > 0) & (from_lo > 0) & (from_hi > 0)
    return nodes, from_lo, from_hi, half * w, valid, x


class _Pairing:
    """Integrand bookkeeping for one (F, n, phi, source) combination."""

    def __init__(self, kind: FundamentalSolution, n: int, phi: BumpFunction, source: tuple[float, ...]):
        self.kind, self.n, self.phi = kind, n, phi
        self.source = np.array(source, dtype=float)
        self.sphere = 2.0 * math.pi ** (0.5 * n) / gamma(0.5 * n) # |S^{n-1}|

    def _test_values(self, rho: np.ndarray, y: np.ndarray) -> np.ndarray:
        y = np.broadcast_to(y, rho.shape)
        points = np.empty(rho.shape + (self.n + 1,))
        points[..., :-1] = self.source
        points[..., -1] = y
        if self.n == 1:
            plus, minus = points.copy(), points
            plus[..., 0] += rho
            minus[..., 0] -= rho
            return np.asarray(apply_tricomi(self.phi, plus)) + np.asarray(apply_tricomi(self.phi, minus))
        points[..., 0] += rho
        return self.sphere * rho ** (self.n - 1) * np.asarray(apply_tricomi(self.phi, points))

    def _segment(self, lo, hi, y: np.ndarray, delta_of, level: int) -> np.ndarray:
        rho, from_lo, from_hi, w, valid, x = _nodes(lo, hi, level)
        delta = np.where(valid, delta_of(rho, from_lo, from_hi, x), 1.0)
        f = fundamental_values(self.kind, self.n, delta)
        values = np.where(valid, f * self._test_values(rho, y[:, None]), 0.0)
        return np.sum(w * values, axis=-1)

    def inner(self, y: np.ndarray, level: int) -> np.ndarray:
        """int over rho of the reduced integrand at each y."""
        width = _bump_width(self.phi, y)
        total = np.zeros_like(y)
        upper = y >= 0
        if np.any(upper):
            yu = y[upper]
            total[upper] = self._segment(
                0.0, width[upper], yu, lambda rho, *_: 9.0 * rho**2 + 4.0 * yu[:, None] ** 3, level)
        lower = ~upper
        if np.any(lower):
            yl, wl = y[lower], width[lower]
            rc = _cone_radius(yl)
            hi = np.minimum(rc, wl)
            rc_col, hi_col = rc[:, None], hi[:, None]

            def inside(rho, from_lo, from_hi, x):
                gap = np.where(x < 0, rc_col - from_lo, (rc_col - hi_col) + from_hi)
                return -9.0 * gap * (rc_col + rho)

            def outside(rho, from_lo, from_hi, x):
                d = np.where(x < 0, from_lo, (np.maximum(wl, rc)[:, None] - rc_col) - from_hi)
                return 9.0 * d * (2.0 * rc_col + d)

            part = self._segment(0.0, hi, yl, inside, level)
            part += self._segment(rc, np.maximum(wl, rc), yl, outside, level)
            total[lower] = part
        return total

    def integral(self, level: int, cuts: list[float]) -> float:
        total = 0.0
        for y0, y1 in zip(cuts, cuts[1:]):
            y, _, _, w, valid, _ = _nodes(y0, y1, level)
            y, w = y[valid], w[valid]
            total += float(np.dot(w, self.inner(y, level)))
        return total


def pairing_integral(kind: FundamentalSolution, n: int, phi: BumpFunction, source: tuple[float, ...] | None = None,
                     qspec: QuadSpec | None = None) -> tuple[QuadResult, list[float]]:
    """int F(x - a, y) (P phi)(x, y) dx dy with the per-level error history.

    Levels run from 3 to qspec.max_subdivisions; the error is the change
    between the last two levels.
    """
    if n not in PAIRING_DIMENSIONS:
        raise ParameterError(f"got n = {n}. {PAIRING_DIMENSION_NOTE}")
    if phi.n != n:
        raise ParameterError(f"bump lives in R^{phi.n + 1}, expected R^{n + 1}")
    source = tuple(source) if source is not None else (0.0,) * n
    if len(source) != n:
        raise ParameterError(f"source needs {n} coordinates")
    if not np.allclose(phi.center[:-1], source, rtol=0.0, atol=1e-14):
        raise PreconditionError("the bump must be centered on the source's spatial location")
    qspec = qspec or QuadSpec(abs_tol=settings.PAIRING_ABS_TOL, rel_tol=settings.PAIRING_ABS_TOL,
                              max_subdivisions=settings.PAIRING_MAX_LEVEL)

    engine = _Pairing(kind, n, phi, source)
    cuts = outer_breakpoints(phi)
    previous = engine.integral(_FIRST_LEVEL, cuts)
    errors: list[float] = []
    estimate, error = previous, math.inf
    for level in range(_FIRST_LEVEL + 1, max(qspec.max_subdivisions, _FIRST_LEVEL + 1) + 1):
        estimate = engine.integral(level, cuts)
        error = abs(estimate - previous)
        errors.append(error)
        log.debug(f"pairing {kind.value} n={n} level {level}: {estimate:.10g} (change {error:.2g})")
        if error <= qspec.abs_tol:
            return QuadResult(value=estimate, error=error, subdivisions=level), errors
        previous = estimate
    raise QuadratureError(f"pairing {kind.value} n={n} did not settle by level {qspec.max_subdivisions}",
                          partial=estimate, error=error, diagnostics={"errors": errors})


def delta_pairing(kind: FundamentalSolution, n: int, phi: BumpFunction | None = None,
                  qspec: QuadSpec | None = None, source: tuple[float, ...] | None = None,
                  name: str | None = None) -> VerificationReport:
    """<F, P phi> against phi at the source; F solves P F = delta there."""
    phi = phi or BumpFunction.at_origin(n)
    source = tuple(source) if source is not None else (0.0,) * n
    at_source = source + (0.0,)
    target = bump_value(phi, at_source)
    if not target > 0:
        raise PreconditionError("the source must lie strictly inside the bump's support")
    result, errors = pairing_integral(kind, n, phi, source, qspec)
    return VerificationReport.from_values(
        name or f"delta-pairing {kind.value} n={n}", target, result.value, _PAIRING_TOL[kind], ToleranceMode.ABS,
        level=result.subdivisions, error_estimate=result.error, level_errors=errors,
    )
