# tricomi/services/quad.py
"""Quadrature engines.

- integrate: tanh-sinh (double exponential) rule with step halving, for
  finite intervals with integrable endpoint singularities; an infinite upper
  limit is handled panel by panel.
- integrate_bessel_tail: e^{-eps t} t^{-lambda} J_mu(a t) J_nu(b t) on
  [0, inf). The head is integrated directly; past the switchover radius the
  product is split into two single-frequency cosines whose panel integrals
  alternate in sign, and the partial sums are accelerated by Wynn's epsilon
  algorithm.
- extrapolate_eps_limit: Neville tableau in eps evaluated at eps = 0.
- sphere_integral: surface integrals on S^1 and S^2.

Integrands are vectorized: they take a numpy array of nodes and return
values of the same shape.
"""
import logging
import math
from collections.abc import Callable, Sequence
from functools import lru_cache

import numpy as np

from tricomi.core.config import settings
from tricomi.core.errors import ExtrapolationError, ParameterError, PreconditionError, QuadratureError
from tricomi.schemas.quad import EpsSchedule, ExtrapolationResult, QuadResult, QuadSpec
from tricomi.schemas.radialft import WsIntegralSpec
from tricomi.schemas.specfun import SeriesPolicy
from tricomi.services.specfun import bessel_j, bessel_j_modulus_phase, default_policy

log = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

_T_MAX = 4.0 # tanh-sinh abscissae |t| <= 4; weights there are ~1e-37
_HEAD_NODES = 24 # Gauss-Legendre nodes per head panel (plus a 32-node check)
_TAIL_NODES = 20
_TAIL_BATCH = 8
_WYNN_WINDOW = 40
_WYNN_DEPTH = 24 # deeper columns only amplify rounding
_QUIET_PANELS = 3
_EXTRAPOLATION_FLOOR = 1e-8 # corrections below this (relative) count as converged


@lru_cache()
def default_quad_spec() -> QuadSpec:
    return QuadSpec(abs_tol=settings.QUAD_ABS_TOL, rel_tol=settings.QUAD_REL_TOL,
                    max_subdivisions=settings.QUAD_MAX_LEVELS)


@lru_cache()
def default_eps_schedule() -> EpsSchedule:
    return EpsSchedule.geometric(settings.EPS_START, settings.EPS_COUNT, settings.EPS_ORDER)


# --- rules ---
@lru_cache(maxsize=32)
def tanh_sinh_rule(level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Nodes x on (-1, 1), distances to -1 and to +1, and weights for step 2^-level.

    The distances are computed without cancellation so callers can place
    nodes next to a singular endpoint accurately.
    """
    h = 2.0**-level
    k = np.arange(-int(round(_T_MAX / h)), int(round(_T_MAX / h)) + 1)
    t = k * h
    u = 0.5 * np.pi * np.sinh(t)
    x = np.tanh(u)
    complement = np.exp(-np.abs(u)) / np.cosh(u) # 1 - |x|
    dist_lower = np.where(x < 0, complement, 1.0 + x)
    dist_upper = np.where(x > 0, complement, 1.0 - x)
    w = h * 0.5 * np.pi * np.cosh(t) / np.cosh(u) ** 2
    for arr in (x, dist_lower, dist_upper, w):
        arr.flags.writeable = False
    return x, dist_lower, dist_upper, w


@lru_cache(maxsize=8)
def gauss_legendre_rule(m: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(m)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


# --- finite and semi-infinite integration ---
def _tanh_sinh_piece(f: Integrand, lo: float, hi: float, spec: QuadSpec) -> QuadResult:
    half = 0.5 * (hi - lo)
    previous = None
    evaluations = 0
    estimate, error = math.nan, math.inf
    for level in range(spec.max_subdivisions + 1):
        x, dist_lower, dist_upper, w = tanh_sinh_rule(level)
        nodes = np.where(x < 0, lo + half * dist_lower, hi - half * dist_upper)
        inside = (nodes > lo) & (nodes < hi)
        values = np.asarray(f(nodes[inside]), dtype=float)
        evaluations += int(inside.sum())
        if not np.all(np.isfinite(values)):
            raise QuadratureError(f"integrand is not finite on ({lo:g}, {hi:g})",
                                  partial=estimate, error=error, diagnostics={"level": level})
        estimate = half * float(np.dot(w[inside], values))
        if previous is not None:
            error = abs(estimate - previous)
            if error <= spec.target(estimate):
                return QuadResult(value=estimate, error=error, evaluations=evaluations, subdivisions=level)
        previous = estimate
    raise QuadratureError(
        f"tanh-sinh rule on ({lo:g}, {hi:g}) did not converge after {spec.max_subdivisions} halvings",
        partial=estimate, error=error, diagnostics={"evaluations": evaluations},
    )


def _integrate_to_infinity(f: Integrand, a: float, spec: QuadSpec, panel_width: float) -> QuadResult:
    total, error, evaluations = 0.0, 0.0, 0
    quiet = 0
    for k in range(settings.TAIL_MAX_PANELS):
        lo = a + k * panel_width
        piece = _tanh_sinh_piece(f, lo, lo + panel_width, spec)
        total += piece.value
        error += piece.error
        evaluations += piece.evaluations
        quiet = quiet + 1 if abs(piece.value) <= 0.1 * spec.target(total) else 0
        if quiet >= _QUIET_PANELS:
            return QuadResult(value=total, error=error, evaluations=evaluations, subdivisions=k + 1)
    raise QuadratureError(f"integrand did not decay within {settings.TAIL_MAX_PANELS} panels",
                          partial=total, error=error)


def integrate(f: Integrand, interval: tuple[float, float], spec: QuadSpec | None = None, *,
              breakpoints: Sequence[float] = (), panel_width: float = 1.0) -> QuadResult:
    """Integral of f over [a, b]; b may be +inf.

    Power-type endpoint singularities x^alpha, alpha > -1, are absorbed by the
    double exponential change of variables. Interior kinks or singularities
    should be passed as breakpoints.
    """
    spec = spec or default_quad_spec()
    a, b = interval
    if math.isinf(a):
        raise ParameterError("lower limit must be finite")
    if a == b:
        return QuadResult(value=0.0, error=0.0)
    if b < a:
        flipped = integrate(f, (b, a), spec, breakpoints=breakpoints, panel_width=panel_width)
        return flipped.model_copy(update={"value": -flipped.value})
    if math.isinf(b):
        return _integrate_to_infinity(f, a, spec, panel_width)

    cuts = [a] + sorted(p for p in set(breakpoints) if a < p < b) + [b]
    total, error, evaluations, level = 0.0, 0.0, 0, 0
    for lo, hi in zip(cuts, cuts[1:]):
        piece = _tanh_sinh_piece(f, lo, hi, spec)
        total += piece.value
        error += piece.error
        evaluations += piece.evaluations
        level = max(level, piece.subdivisions)
    log.debug(f"integrate [{a:g}, {b:g}]: {total:.16g} +/- {error:.2g} ({evaluations} evaluations)")
    return QuadResult(value=total, error=error, evaluations=evaluations, subdivisions=level)


# --- acceleration ---
def wynn_epsilon(partial_sums: Sequence[float]) -> tuple[float, float]:
    """Limit of a sequence by Wynn's epsilon algorithm, with an error estimate.

    The estimate is the distance between the last two even-column entries.
    """
    s = [float(v) for v in partial_sums]
    if len(s) < 3:
        return s[-1], abs(s[-1] - s[-2]) if len(s) == 2 else math.inf
    previous = [0.0] * (len(s) + 1)
    current = s
    estimates = [s[-1]]
    for k in range(1, min(len(s), _WYNN_DEPTH)):
        following = []
        for i in range(len(current) - 1):
            diff = current[i + 1] - current[i]
            if diff == 0.0 or not math.isfinite(diff):
                break
            following.append(previous[i + 1] + 1.0 / diff)
        if len(following) < len(current) - 1 or not following:
            break
        previous, current = current, following
        if k % 2 == 0:
            estimates.append(current[-1])
    if len(estimates) < 2:
        return s[-1], abs(s[-1] - s[-2])
    return estimates[-1], abs(estimates[-1] - estimates[-2])


# --- Bessel-product tails ---
def _check_ws(ws: WsIntegralSpec, eps: float) -> None:
    if ws.a == ws.b:
        raise PreconditionError("the Bessel-product integral needs a != b")
    if eps < 0:
        raise PreconditionError("eps must be >= 0")


def _ws_values(ws: WsIntegralSpec, eps: float, t: np.ndarray, policy: SeriesPolicy) -> np.ndarray:
    return (np.exp(-eps * t) * t ** (-ws.lam)
            * np.asarray(bessel_j(ws.mu, ws.a * t, policy)) * np.asarray(bessel_j(ws.nu, ws.b * t, policy)))


def _composite_gauss(f: Integrand, edges: np.ndarray, m: int) -> np.ndarray:
    """Integrals of f over each [edges[i], edges[i+1]] with an m-point rule, in one call."""
    nodes, weights = gauss_legendre_rule(m)
    lo, hi = edges[:-1, None], edges[1:, None]
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    values = np.asarray(f((mid + half * nodes).ravel())).reshape(len(edges) - 1, m)
    return half[:, 0] * (values @ weights)


def _tail_component(ws: WsIntegralSpec, eps: float, start: float, sign: float, spec: QuadSpec,
                    policy: SeriesPolicy) -> QuadResult:
    """int_start^inf of (1/2) amplitude cos(theta_a + sign * theta_b), accelerated."""
    omega = ws.a + sign * ws.b
    offset = -(0.5 * ws.mu + 0.25) * math.pi - sign * (0.5 * ws.nu + 0.25) * math.pi
    if omega < 0:
        omega, offset = -omega, -offset

    def component(t: np.ndarray) -> np.ndarray:
        ma, ta = bessel_j_modulus_phase(ws.mu, ws.a * t, policy)
        mb, tb = bessel_j_modulus_phase(ws.nu, ws.b * t, policy)
        return 0.5 * np.exp(-eps * t) * t ** (-ws.lam) * ma * mb * np.cos(ta + sign * tb)

    # approximate zeros of cos(omega t + offset) past the start
    first = math.floor((omega * start + offset) / math.pi - 0.5) + 1
    zero = lambda k: ((k + 0.5) * math.pi - offset) / omega  # noqa: E731

    partial_sums: list[float] = []
    running = 0.0
    lo = start
    k = first
    limit, error = math.nan, math.inf
    previous_limit = None
    max_panels = settings.TAIL_MAX_PANELS
    while len(partial_sums) < max_panels:
        edges = np.array([lo] + [zero(k + j) for j in range(_TAIL_BATCH)])
        pieces = _composite_gauss(component, edges, _TAIL_NODES)
        for piece in pieces:
            running += float(piece)
            partial_sums.append(running)
        lo = float(edges[-1])
        k += _TAIL_BATCH
        limit, error = wynn_epsilon(partial_sums[-_WYNN_WINDOW:])
        if previous_limit is not None:
            error = max(error, abs(limit - previous_limit))
            if error <= spec.target(limit):
                return QuadResult(value=limit, error=error, evaluations=len(partial_sums) * _TAIL_NODES,
                                  subdivisions=len(partial_sums))
        previous_limit = limit
    raise QuadratureError(f"tail acceleration did not converge within {max_panels} panels",
                          partial=limit, error=error, diagnostics={"omega": omega})


def integrate_bessel_tail(ws: WsIntegralSpec, eps: float, spec: QuadSpec | None = None,
                          policy: SeriesPolicy | None = None) -> QuadResult:
    """I_eps(a, b) = int_0^inf e^{-eps t} t^{-lambda} J_mu(a t) J_nu(b t) dt."""
    _check_ws(ws, eps)
    spec = spec or default_quad_spec()
    policy = policy or default_policy()

    values = lambda t: _ws_values(ws, eps, t, policy)  # noqa: E731
    # head: both Bessel arguments reach the switchover radius at t_switch
    t_switch = policy.switchover_radius / min(ws.a, ws.b)
    width = math.pi / (ws.a + ws.b)
    first = integrate(values, (0.0, width), spec)
    edges = np.linspace(width, t_switch, max(2, math.ceil((t_switch - width) / width) + 1))
    coarse = _composite_gauss(values, edges, _HEAD_NODES).sum()
    fine = _composite_gauss(values, edges, _HEAD_NODES + 8).sum()
    head = first.value + fine
    head_error = first.error + abs(fine - coarse)

    plus = _tail_component(ws, eps, t_switch, 1.0, spec, policy)
    minus = _tail_component(ws, eps, t_switch, -1.0, spec, policy)
    value = head + plus.value + minus.value
    error = head_error + plus.error + minus.error
    log.debug(f"I_eps(eps={eps:g}) = {value:.16g} +/- {error:.2g}; tail panels {plus.subdivisions}+{minus.subdivisions}")
    return QuadResult(value=value, error=error,
                      evaluations=first.evaluations + len(edges) * (2 * _HEAD_NODES + 8) + plus.evaluations + minus.evaluations,
                      subdivisions=plus.subdivisions + minus.subdivisions)


# --- eps -> 0 extrapolation ---
def extrapolate_eps_limit(samples: Sequence[tuple[float, float]], schedule: EpsSchedule) -> ExtrapolationResult:
    """Polynomial (Neville) extrapolation of eps-samples to eps = 0.

    The tableau runs over the whole ladder; the reported value is the entry
    of degree `extrapolation_order` on the smallest eps values, and its error
    the last correction along that row.
    """
    eps = [float(e) for e, _ in samples]
    values = [float(v) for _, v in samples]
    expected = schedule.eps_values
    if len(eps) != len(expected) or any(abs(e - x) > 1e-15 * x for e, x in zip(eps, expected)):
        raise PreconditionError("samples must be taken on the schedule's eps values")
    order = schedule.extrapolation_order
    tableau = [[v] for v in values]
    for j in range(1, len(eps)):
        for k in range(1, min(j, order) + 1):
            lower, upper = eps[j - k], eps[j]
            tableau[j].append((upper * tableau[j - 1][k - 1] - lower * tableau[j][k - 1]) / (upper - lower))
    row = tableau[-1]
    corrections = [abs(row[k] - row[k - 1]) for k in range(1, len(row))]
    value = row[-1]
    error = corrections[-1] if corrections else math.inf
    floor = _EXTRAPOLATION_FLOOR * max(1.0, abs(value))
    if len(corrections) >= 2 and corrections[-1] > corrections[-2] and corrections[-1] > floor:
        raise ExtrapolationError(
            f"eps extrapolation is unstable: corrections {corrections}",
            partial=value, error=error, diagnostics={"corrections": corrections},
        )
    return ExtrapolationResult(value=value, error=error, corrections=corrections)


# --- spheres ---
def sphere_integral(n: int, g: Callable[[np.ndarray], np.ndarray], nodes: int = 64) -> float:
    """Integral of g over the unit sphere S^{n-1} in R^n; g takes an (M, n) array of unit vectors."""
    if n == 2:
        theta = 2.0 * np.pi * np.arange(nodes) / nodes
        omega = np.column_stack([np.cos(theta), np.sin(theta)])
        return float(2.0 * np.pi / nodes * np.sum(g(omega)))
    if n == 3:
        u, wu = gauss_legendre_rule(nodes // 2)
        phi = 2.0 * np.pi * np.arange(nodes) / nodes
        uu, pp = np.meshgrid(u, phi, indexing="ij")
        sin_theta = np.sqrt(1.0 - uu**2)
        omega = np.column_stack([(sin_theta * np.cos(pp)).ravel(), (sin_theta * np.sin(pp)).ravel(), uu.ravel()])
        weights = np.outer(wu, np.full(nodes, 2.0 * np.pi / nodes)).ravel()
        return float(np.dot(weights, g(omega)))
    raise ParameterError(f"sphere_integral supports n in {{2, 3}}, got {n}")
