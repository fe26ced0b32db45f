# tricomi/services/specfun.py
"""Real-argument Gamma, Bessel (J, I, K, N) and Airy functions.

Small arguments are summed from the ascending series with compensated
summation. Past the switchover radius the Hankel expansions take over,
truncated at their smallest term. K between the two regimes comes from its
integral representation. Every function accepts a scalar or a numpy array and
answers in kind.
"""
import logging
import math
from functools import lru_cache

import numpy as np
from scipy import special as sc

from tricomi.core.config import settings
from tricomi.core.errors import ConvergenceError, DomainError, OrderError, PoleError
from tricomi.schemas.specfun import SeriesPolicy

log = logging.getLogger(__name__)

_TINY = np.finfo(float).tiny
_I_OVERFLOW = 700.0 # e^x overflows shortly after 709
_K_TRAPEZOID_STEP = 0.125
_K_TRAPEZOID_DEPTH = 45.0 # integrand cut where x (cosh u - 1) exceeds this


@lru_cache()
def default_policy() -> SeriesPolicy:
    return SeriesPolicy(
        truncation_tol=settings.SERIES_TRUNCATION_TOL,
        max_terms=settings.SERIES_MAX_TERMS,
        switchover_radius=settings.SWITCHOVER_RADIUS,
        k_series_radius=settings.K_SERIES_RADIUS,
    )


# --- helpers ---
def _as_array(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("special functions need finite arguments")
    return np.atleast_1d(arr), arr.ndim == 0


def _result(values: np.ndarray, scalar: bool):
    return float(values.reshape(-1)[0]) if scalar else values


def _is_integer(nu: float) -> bool:
    return float(nu).is_integer()


def _nonpositive_integers(arr: np.ndarray) -> np.ndarray:
    return (arr <= 0) & (arr == np.floor(arr))


def _sinpi(x):
    """sin(pi x) with the argument reduced to [-1, 1] first."""
    r = x - 2.0 * np.round(0.5 * x)
    return np.sin(np.pi * r)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


# --- Gamma ---
def gamma(x):
    """Gamma function; reflection formula below 1/2."""
    arr, scalar = _as_array(x)
    poles = _nonpositive_integers(arr)
    if np.any(poles):
        raise PoleError(f"Gamma has a pole at {arr[poles][0]:g}")
    out = np.empty_like(arr)
    upper = arr >= 0.5
    out[upper] = sc.gamma(arr[upper])
    lower = ~upper
    if np.any(lower):
        xl = arr[lower]
        out[lower] = np.pi / (_sinpi(xl) * sc.gamma(1.0 - xl))
    return _result(out, scalar)


def rgamma(x):
    """1/Gamma(x), exactly zero at the poles."""
    arr, scalar = _as_array(x)
    out = np.zeros_like(arr)
    regular = ~_nonpositive_integers(arr)
    upper = regular & (arr >= 0.5)
    lower = regular & (arr < 0.5)
    out[upper] = 1.0 / sc.gamma(arr[upper])
    if np.any(lower):
        xl = arr[lower]
        out[lower] = _sinpi(xl) * sc.gamma(1.0 - xl) / np.pi
    return _result(out, scalar)


# --- series and asymptotic kernels ---
def _ascending_series(nu: float, x: np.ndarray, sign: float, policy: SeriesPolicy) -> np.ndarray:
    """sum_r sign^r (x/2)^{2r} / (r! Gamma(nu + r + 1)) with Kahan compensation."""
    q = sign * 0.25 * x * x
    q_max = float(np.max(np.abs(q))) if q.size else 0.0
    term = np.full_like(x, rgamma(nu + 1.0))
    total = term.copy()
    comp = np.zeros_like(x)
    for r in range(1, policy.max_terms + 1):
        term = term * q / (r * (nu + r))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if r * abs(nu + r) > q_max and np.all(
            np.abs(term) <= policy.truncation_tol * np.maximum(np.abs(total), _TINY)
        ):
            return total
    raise ConvergenceError(
        f"ascending series of order {nu} did not converge in {policy.max_terms} terms",
        partial=float(total.reshape(-1)[0]),
    )


def _hankel_terms(nu: float, x: np.ndarray, policy: SeriesPolicy):
    """Yields (k, a_k(nu)/x^k, active mask) until every lane hits its smallest term."""
    mu = 4.0 * nu * nu
    term = np.ones_like(x)
    prev = np.full_like(x, np.inf)
    active = np.ones(x.shape, dtype=bool)
    for k in range(1, policy.max_terms + 1):
        term = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        mag = np.abs(term)
        active &= mag < prev
        if not np.any(active):
            return
        yield k, np.where(active, term, 0.0)
        prev = mag
        active &= mag > policy.truncation_tol


def _hankel_pq(nu: float, x: np.ndarray, policy: SeriesPolicy) -> tuple[np.ndarray, np.ndarray]:
    p = np.ones_like(x)
    q = np.zeros_like(x)
    for k, step in _hankel_terms(nu, x, policy):
        if k % 2:
            q += step if k % 4 == 1 else -step
        else:
            p += -step if k % 4 == 2 else step
    return p, q


def _hankel_sum(nu: float, x: np.ndarray, alternate: bool, policy: SeriesPolicy) -> np.ndarray:
    total = np.ones_like(x)
    for k, step in _hankel_terms(nu, x, policy):
        total += -step if (alternate and k % 2) else step
    return total


def _j_series(nu, x, policy):
    return (0.5 * x) ** nu * _ascending_series(nu, x, -1.0, policy)


def _j_asymptotic(nu, x, policy):
    p, q = _hankel_pq(nu, x, policy)
    chi = x - (0.5 * nu + 0.25) * np.pi
    return np.sqrt(2.0 / (np.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def _i_series(nu, x, policy):
    return (0.5 * x) ** nu * _ascending_series(nu, x, 1.0, policy)


def _i_asymptotic(nu, x, policy):
    if np.any(x > _I_OVERFLOW):
        raise DomainError(f"I_nu(x) overflows for x > {_I_OVERFLOW:g}")
    return np.exp(x) / np.sqrt(2.0 * np.pi * x) * _hankel_sum(nu, x, True, policy)


def _k_from_i(nu, x, policy):
    return 0.5 * np.pi / math.sin(nu * math.pi) * (_i_series(-nu, x, policy) - _i_series(nu, x, policy))


def _k_trapezoid(nu, x):
    # e^x K_nu(x) = int_0^inf exp(-x (cosh u - 1)) cosh(nu u) du
    h = _K_TRAPEZOID_STEP
    u_max = math.acosh(1.0 + _K_TRAPEZOID_DEPTH / max(float(np.min(x)), 1e-300))
    u = np.arange(0.0, u_max + h, h)
    weights = np.full(u.shape, h)
    weights[0] = 0.5 * h
    log_cosh = np.logaddexp(nu * u, -nu * u) - math.log(2.0)
    kernel = np.exp(log_cosh - np.multiply.outer(x, np.cosh(u) - 1.0))
    return np.exp(-x) * (kernel @ weights)


def _k_asymptotic(nu, x, policy):
    return np.sqrt(0.5 * np.pi / x) * np.exp(-x) * _hankel_sum(nu, x, False, policy)


# --- Bessel J ---
def bessel_j(nu: float, x, policy: SeriesPolicy | None = None):
    """J_nu(x) for real order and x >= 0."""
    policy = policy or default_policy()
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr >= 0)), "bessel_j needs x >= 0")
    if nu < 0 and _is_integer(nu):
        m = int(-nu)
        return _result((-1.0) ** m * np.asarray(bessel_j(float(m), arr, policy)), scalar)
    _require(nu >= 0 or bool(np.all(arr > 0)),
             "J_nu(0) diverges for negative non-integer order; use bessel_j_scaled")
    out = np.empty_like(arr)
    small = arr <= policy.switchover_radius
    if np.any(small):
        out[small] = _j_series(nu, arr[small], policy)
    if np.any(~small):
        out[~small] = _j_asymptotic(nu, arr[~small], policy)
    return _result(out, scalar)


def bessel_j_series(nu: float, x, policy: SeriesPolicy | None = None):
    arr, scalar = _as_array(x)
    return _result(_j_series(nu, arr, policy or default_policy()), scalar)


def bessel_j_asymptotic(nu: float, x, policy: SeriesPolicy | None = None):
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "asymptotic form needs x > 0")
    return _result(_j_asymptotic(nu, arr, policy or default_policy()), scalar)


def bessel_j_scaled(nu: float, t, policy: SeriesPolicy | None = None):
    """t^|nu| J_nu(t) for |nu| < 1, finite at t = 0."""
    policy = policy or default_policy()
    _require(abs(nu) < 1, "scaled J needs |nu| < 1")
    arr, scalar = _as_array(t)
    _require(bool(np.all(arr >= 0)), "bessel_j_scaled needs t >= 0")
    out = np.empty_like(arr)
    small = arr <= policy.switchover_radius
    if np.any(small):
        ts = arr[small]
        out[small] = 2.0**-nu * ts ** (abs(nu) + nu) * _ascending_series(nu, ts, -1.0, policy)
    if np.any(~small):
        tl = arr[~small]
        out[~small] = tl ** abs(nu) * _j_asymptotic(nu, tl, policy)
    return _result(out, scalar)


def bessel_j_modulus_phase(nu: float, x, policy: SeriesPolicy | None = None):
    """(M, theta) with J_nu(x) = M cos(theta), from the Hankel P and Q; meant for large x."""
    policy = policy or default_policy()
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "modulus-phase form needs x > 0")
    p, q = _hankel_pq(nu, arr, policy)
    modulus = np.sqrt(2.0 / (np.pi * arr)) * np.hypot(p, q)
    phase = arr - (0.5 * nu + 0.25) * np.pi + np.arctan2(q, p)
    return _result(modulus, scalar), _result(phase, scalar)


# --- Bessel I ---
def bessel_i(nu: float, x, policy: SeriesPolicy | None = None):
    """I_nu(x) for real order and x >= 0; raises instead of overflowing."""
    policy = policy or default_policy()
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr >= 0)), "bessel_i needs x >= 0")
    if nu < 0 and _is_integer(nu):
        return bessel_i(-nu, x, policy)
    _require(nu >= 0 or bool(np.all(arr > 0)),
             "I_nu(0) diverges for negative non-integer order; use bessel_i_scaled")
    out = np.empty_like(arr)
    small = arr <= policy.switchover_radius
    if np.any(small):
        out[small] = _i_series(nu, arr[small], policy)
    if np.any(~small):
        out[~small] = _i_asymptotic(nu, arr[~small], policy)
    return _result(out, scalar)


def bessel_i_series(nu: float, x, policy: SeriesPolicy | None = None):
    arr, scalar = _as_array(x)
    return _result(_i_series(nu, arr, policy or default_policy()), scalar)


def bessel_i_asymptotic(nu: float, x, policy: SeriesPolicy | None = None):
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "asymptotic form needs x > 0")
    return _result(_i_asymptotic(nu, arr, policy or default_policy()), scalar)


def bessel_i_scaled(nu: float, s, policy: SeriesPolicy | None = None):
    """s^|nu| I_nu(s) for |nu| < 1, finite at s = 0."""
    policy = policy or default_policy()
    _require(abs(nu) < 1, "scaled I needs |nu| < 1")
    arr, scalar = _as_array(s)
    _require(bool(np.all(arr >= 0)), "bessel_i_scaled needs s >= 0")
    out = np.empty_like(arr)
    small = arr <= policy.switchover_radius
    if np.any(small):
        ss = arr[small]
        out[small] = 2.0**-nu * ss ** (abs(nu) + nu) * _ascending_series(nu, ss, 1.0, policy)
    if np.any(~small):
        sl = arr[~small]
        out[~small] = sl ** abs(nu) * _i_asymptotic(nu, sl, policy)
    return _result(out, scalar)


# --- Bessel K ---
def bessel_k(nu: float, x, policy: SeriesPolicy | None = None):
    """K_nu(x) for non-integer order and x > 0."""
    policy = policy or default_policy()
    if _is_integer(nu):
        raise OrderError(f"bessel_k is defined here for non-integer orders only, got {nu:g}")
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "bessel_k needs x > 0")
    nu = abs(nu)
    out = np.empty_like(arr)
    small = arr <= policy.k_series_radius
    large = arr > policy.switchover_radius
    middle = ~small & ~large
    if np.any(small):
        out[small] = _k_from_i(nu, arr[small], policy)
    if np.any(middle):
        out[middle] = _k_trapezoid(nu, arr[middle])
    if np.any(large):
        out[large] = _k_asymptotic(nu, arr[large], policy)
    return _result(out, scalar)


def bessel_k_series(nu: float, x, policy: SeriesPolicy | None = None):
    """K_nu from the difference of I_{-nu} and I_nu series."""
    if _is_integer(nu):
        raise OrderError(f"the I-difference form needs a non-integer order, got {nu:g}")
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "bessel_k needs x > 0")
    return _result(_k_from_i(abs(nu), arr, policy or default_policy()), scalar)


def bessel_k_integral(nu: float, x):
    """K_nu(x) by the trapezoid rule on its cosh integral; any real order."""
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "bessel_k needs x > 0")
    return _result(_k_trapezoid(abs(nu), arr), scalar)


def bessel_k_asymptotic(nu: float, x, policy: SeriesPolicy | None = None):
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "asymptotic form needs x > 0")
    return _result(_k_asymptotic(abs(nu), arr, policy or default_policy()), scalar)


def bessel_k_scaled(nu: float, s, policy: SeriesPolicy | None = None):
    """s^|nu| K_nu(s) for non-integer |nu| < 1; tends to 2^{|nu|-1} Gamma(|nu|) at 0."""
    policy = policy or default_policy()
    if _is_integer(nu):
        raise OrderError("scaled K needs a non-integer order")
    _require(abs(nu) < 1, "scaled K needs |nu| < 1")
    arr, scalar = _as_array(s)
    _require(bool(np.all(arr >= 0)), "bessel_k_scaled needs s >= 0")
    nu = abs(nu)
    out = np.empty_like(arr)
    small = arr <= policy.k_series_radius
    if np.any(small):
        ss = arr[small]
        out[small] = 0.5 * np.pi / math.sin(nu * math.pi) * (
            np.asarray(bessel_i_scaled(-nu, ss, policy)) - np.asarray(bessel_i_scaled(nu, ss, policy))
        )
    if np.any(~small):
        sl = arr[~small]
        out[~small] = sl**nu * np.asarray(bessel_k(nu, sl, policy))
    return _result(out, scalar)


# --- Neumann N ---
def neumann_n(nu: float, x, policy: SeriesPolicy | None = None):
    """N_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi), non-integer order, x > 0."""
    if _is_integer(nu):
        raise OrderError(f"neumann_n is defined here for non-integer orders only, got {nu:g}")
    arr, scalar = _as_array(x)
    _require(bool(np.all(arr > 0)), "neumann_n needs x > 0")
    jp = np.asarray(bessel_j(nu, arr, policy))
    jm = np.asarray(bessel_j(-nu, arr, policy))
    return _result((jp * math.cos(nu * math.pi) - jm) / math.sin(nu * math.pi), scalar)


def neumann_n_scaled(nu: float, t, policy: SeriesPolicy | None = None):
    """t^|nu| N_nu(t) for non-integer |nu| < 1."""
    if _is_integer(nu):
        raise OrderError("scaled N needs a non-integer order")
    jp = np.asarray(bessel_j_scaled(nu, t, policy))
    jm = np.asarray(bessel_j_scaled(-nu, t, policy))
    out = (jp * math.cos(nu * math.pi) - jm) / math.sin(nu * math.pi)
    return float(out) if np.ndim(t) == 0 else out


# --- Airy ---
AI_0 = 3.0 ** (-2.0 / 3.0) / gamma(2.0 / 3.0)
AI_PRIME_0 = -(3.0 ** (-4.0 / 3.0)) / gamma(4.0 / 3.0)
BI_0 = 3.0 ** (-1.0 / 6.0) / gamma(2.0 / 3.0)
BI_PRIME_0 = 3.0 ** (-5.0 / 6.0) / gamma(4.0 / 3.0)

_C13 = 1.5 ** (1.0 / 3.0) # sqrt(z) = (3 s / 2)^{1/3}
_C23 = 1.5 ** (2.0 / 3.0) # z = (3 s / 2)^{2/3}
_SQRT3 = math.sqrt(3.0)


def _airy(z, at_zero: float, above, below):
    arr, scalar = _as_array(z)
    out = np.full_like(arr, at_zero)
    pos = arr > 0
    neg = arr < 0
    if np.any(pos):
        out[pos] = above(2.0 / 3.0 * arr[pos] ** 1.5)
    if np.any(neg):
        out[neg] = below(2.0 / 3.0 * (-arr[neg]) ** 1.5)
    return _result(out, scalar)


def airy_ai(z):
    return _airy(
        z, AI_0,
        lambda s: _C13 / (np.pi * _SQRT3) * np.asarray(bessel_k_scaled(1.0 / 3.0, s)),
        lambda t: _C13 / 3.0 * (np.asarray(bessel_j_scaled(1.0 / 3.0, t)) + np.asarray(bessel_j_scaled(-1.0 / 3.0, t))),
    )


def airy_bi(z):
    return _airy(
        z, BI_0,
        lambda s: _C13 / _SQRT3 * (np.asarray(bessel_i_scaled(-1.0 / 3.0, s)) + np.asarray(bessel_i_scaled(1.0 / 3.0, s))),
        lambda t: _C13 / _SQRT3 * (np.asarray(bessel_j_scaled(-1.0 / 3.0, t)) - np.asarray(bessel_j_scaled(1.0 / 3.0, t))),
    )


def airy_ai_prime(z):
    return _airy(
        z, AI_PRIME_0,
        lambda s: -_C23 / (np.pi * _SQRT3) * np.asarray(bessel_k_scaled(2.0 / 3.0, s)),
        lambda t: _C23 / 3.0 * (np.asarray(bessel_j_scaled(2.0 / 3.0, t)) - np.asarray(bessel_j_scaled(-2.0 / 3.0, t))),
    )


def airy_bi_prime(z):
    return _airy(
        z, BI_PRIME_0,
        lambda s: _C23 / _SQRT3 * (np.asarray(bessel_i_scaled(-2.0 / 3.0, s)) + np.asarray(bessel_i_scaled(2.0 / 3.0, s))),
        lambda t: _C23 / _SQRT3 * (np.asarray(bessel_j_scaled(-2.0 / 3.0, t)) + np.asarray(bessel_j_scaled(2.0 / 3.0, t))),
    )
