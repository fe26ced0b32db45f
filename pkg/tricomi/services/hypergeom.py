# tricomi/services/hypergeom.py
"""Gauss hypergeometric function F(a, b; c; z) for real parameters and z <= 1.

Region map: direct series for |z| <= 1/2, the Euler transformation on
(1/2, HYP2F1_EULER_MAX_Z], the 1 - z connection formulas above that, the
Pfaff transformation for z < 0 and the Gauss sum at z = 1. Polynomial cases
(a or b a nonpositive integer) are always summed directly.

The connection formula for non-integer c - a - b loses about
log10(1 / dist) digits when c - a - b lies at distance dist from an integer;
c - a - b within a relative 1e-12 of an integer takes the logarithmic limit
form instead.
"""
import logging
import math

import numpy as np
from scipy import special as sc

from tricomi.core.config import settings
from tricomi.core.errors import ConvergenceError, DivergenceError, ParameterError
from tricomi.schemas.hypergeom import Hyp2F1Params, SeriesSum
from tricomi.schemas.quad import QuadSpec
from tricomi.services import quad
from tricomi.services.specfun import gamma, rgamma

log = logging.getLogger(__name__)

_DIRECT_PRODUCT_LIMIT = 64
_INTEGER_SNAP = 1e-12 # c - a - b this close to an integer takes the logarithmic form


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a, n) = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise ParameterError("pochhammer needs n >= 0")
    if n <= _DIRECT_PRODUCT_LIMIT:
        return float(np.prod(a + np.arange(n, dtype=float)))
    if _is_nonpositive_integer(a):
        if a + n > 0:
            return 0.0 # the product passes through zero
        # (a, n) = (-1)^n Gamma(1 - a) / Gamma(1 - a - n), both arguments positive
        return float((-1.0) ** n * math.exp(sc.gammaln(1.0 - a) - sc.gammaln(1.0 - a - n)))
    sign = sc.gammasgn(a + n) * sc.gammasgn(a)
    return float(sign * math.exp(sc.gammaln(a + n) - sc.gammaln(a)))


def _series(a: float, b: float, c: float, z: float) -> SeriesSum:
    tol = settings.HYP2F1_TOL
    term = 1.0
    total = 1.0
    comp = 0.0
    for k in range(settings.HYP2F1_MAX_TERMS):
        ratio = (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        term *= ratio
        if term == 0.0:
            return SeriesSum(value=total, terms=k + 1)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        next_ratio = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * z)
        if abs(term) <= tol * max(1.0, abs(total)) and next_ratio < 1.0:
            return SeriesSum(value=total, terms=k + 2)
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) series did not converge in {settings.HYP2F1_MAX_TERMS} terms",
        partial=total,
    )


def _check(a: float, b: float, c: float, z: float) -> None:
    if _is_nonpositive_integer(c):
        raise ParameterError(f"c = {c:g} is a nonpositive integer")
    if z > 1.0:
        raise ParameterError(f"z = {z:g} > 1 is outside the supported region")


def _gauss_sum(a: float, b: float, c: float) -> float:
    if c - a - b <= 0:
        raise DivergenceError(f"F(a, b; c; 1) diverges for c - a - b = {c - a - b:g} <= 0")
    return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)


def _hyp2f1(a: float, b: float, c: float, z: float) -> float:
    _check(a, b, c, z)
    if _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        return _series(a, b, c, z).value
    if z == 1.0:
        return _gauss_sum(a, b, c)
    if z < 0.0:
        return (1.0 - z) ** -a * _hyp2f1(a, c - b, c, z / (z - 1.0))
    if z <= 0.5:
        return _series(a, b, c, z).value
    m = c - a - b
    if z <= settings.HYP2F1_EULER_MAX_Z:
        return (1.0 - z) ** m * _series(c - a, c - b, c, z).value
    w = 1.0 - z
    m_int = round(m)
    if abs(m - m_int) > _INTEGER_SNAP * max(1.0, abs(a), abs(b), abs(c)):
        return _connection(a, b, c, w)
    if m_int >= 0:
        return _log_connection(a, b, m_int, w)
    return w**m * _log_connection(c - a, c - b, -m_int, w)


def _connection(a: float, b: float, c: float, w: float) -> float:
    """F(a, b; c; 1 - w) as two series in w; c - a - b not an integer."""
    m = c - a - b
    first = gamma(c) * gamma(m) * rgamma(c - a) * rgamma(c - b) * _series(a, b, 1.0 - m, w).value
    second = w**m * gamma(c) * gamma(-m) * rgamma(a) * rgamma(b) * _series(c - a, c - b, m + 1.0, w).value
    return first + second


def _log_connection(a: float, b: float, m: int, w: float) -> float:
    """F(a, b; a + b + m; 1 - w) for an integer m >= 0, the logarithmic limit form."""
    c = a + b + m
    finite = 0.0
    if m > 0:
        term = 1.0
        for k in range(m):
            finite += term
            if k < m - 1:
                term *= (a + k) * (b + k) / ((k + 1) * (1 - m + k)) * w
        finite *= gamma(float(m)) * gamma(c) * rgamma(a + m) * rgamma(b + m)

    tol = settings.HYP2F1_TOL
    log_w = math.log(w)
    coef = 1.0 / math.factorial(m)
    total = 0.0
    for k in range(settings.HYP2F1_MAX_TERMS):
        bracket = (log_w - sc.digamma(k + 1.0) - sc.digamma(k + m + 1.0)
                   + sc.digamma(a + k + m) + sc.digamma(b + k + m))
        total += coef * bracket
        if abs(coef) * (abs(bracket) + 1.0) <= tol * max(1.0, abs(total)) and k > 0:
            break
        coef *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * w
    else:
        raise ConvergenceError(
            f"logarithmic 2F1 series at 1 - z = {w} did not converge in {settings.HYP2F1_MAX_TERMS} terms",
            partial=total,
        )
    return finite - (-w) ** m * gamma(c) * rgamma(a) * rgamma(b) * total


def hyp2f1(p: Hyp2F1Params) -> float:
    return _hyp2f1(p.a, p.b, p.c, p.z)


def hyp2f1_value(a: float, b: float, c: float, z: float) -> float:
    return _hyp2f1(a, b, c, z)


def hyp2f1_series(p: Hyp2F1Params) -> SeriesSum:
    """The bare power series with its term count; |z| < 1 or a terminating case."""
    _check(p.a, p.b, p.c, p.z)
    return _series(p.a, p.b, p.c, p.z)


def hyp2f1_euler_integral(p: Hyp2F1Params, qspec: QuadSpec | None = None) -> float:
    """Euler's integral representation, evaluated by tanh-sinh quadrature."""
    a, b, c, z = p.a, p.b, p.c, p.z
    if not (c > b > 0):
        raise ParameterError("Euler's integral needs c > b > 0")
    if not z < 1.0:
        raise ParameterError("Euler's integral needs z < 1")
    qspec = qspec or QuadSpec(abs_tol=1e-14, rel_tol=1e-12, max_subdivisions=12)

    # split at 1/2 and reflect the upper half so both endpoint singularities sit at 0
    def lower(t):
        return t ** (b - 1.0) * (1.0 - t) ** (c - b - 1.0) * (1.0 - t * z) ** -a

    def upper(u):
        return (1.0 - u) ** (b - 1.0) * u ** (c - b - 1.0) * (1.0 - (1.0 - u) * z) ** -a

    integral = quad.integrate(lower, (0.0, 0.5), qspec).value + quad.integrate(upper, (0.0, 0.5), qspec).value
    return gamma(c) * rgamma(b) * rgamma(c - b) * integral
