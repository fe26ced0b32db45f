# tricomi/services/fundsol.py
"""Fundamental solutions of P = y Laplace_x + d^2/dy^2 in R^{n+1}.

Geometry is carried by the discriminant Delta = 9|x|^2 + 4y^3: D_+ where it
is positive, D_- where it is negative, the characteristic cone where it
vanishes. Every solution is a constant times |Delta|^{1/3 - n/2} on each
side, so values can be computed from Delta alone.

The spectral side holds the partial Fourier transforms in x: solutions of
F'' - y |xi|^2 F = 0 with a unit jump in F' at the source.
"""
import logging
import math
from functools import lru_cache
from typing import Literal

import numpy as np

from tricomi.core.config import settings
from tricomi.core.errors import ConvergenceError, DomainError, ParityError, SingularLocusError
from tricomi.schemas.common import Construction, FundamentalSolution, Quantity, Region
from tricomi.schemas.fundsol import (
    ABConstants,
    DimensionConstants,
    EvalResult,
    JumpDiagnostics,
    SpacetimePoint,
    SpectralGreen,
    SubstitutedTime,
)
from tricomi.services.specfun import (
    airy_ai,
    airy_ai_prime,
    airy_bi,
    airy_bi_prime,
    bessel_j_scaled,
    bessel_k_scaled,
    gamma,
    neumann_n_scaled,
    rgamma,
)

log = logging.getLogger(__name__)

Branch = Literal["above", "below"]

_COS_HALF_PI = (1.0, 0.0, -1.0, 0.0) # cos(n pi / 2), n mod 4
_GAMMA_23 = gamma(2.0 / 3.0)
_GAMMA_43 = gamma(4.0 / 3.0)


# --- geometry ---
def discriminant(radius, y):
    """9|x|^2 + 4y^3; broadcasts over arrays."""
    return 9.0 * np.square(radius) + 4.0 * np.power(y, 3)


def default_cone_tol(p: SpacetimePoint) -> float:
    return settings.CONE_TOL * (1.0 + 9.0 * p.radius**2 + 4.0 * abs(p.y) ** 3)


def classify(p: SpacetimePoint, cone_tol: float | None = None) -> Region:
    tol = default_cone_tol(p) if cone_tol is None else cone_tol
    if tol < 0:
        raise DomainError("cone_tol must be >= 0")
    if p.discriminant > tol:
        return Region.DPLUS
    if p.discriminant < -tol:
        return Region.DMINUS
    return Region.CONE


def homogeneity_degree(n: int) -> float:
    """Degree d with F(t^3 x, t^2 y) = t^d F(x, y)."""
    return 2.0 - 3.0 * n


def dilate(p: SpacetimePoint, t: float) -> SpacetimePoint:
    return SpacetimePoint(x=tuple(t**3 * v for v in p.x), y=t**2 * p.y)


def _exponent(n: int) -> float:
    return 1.0 / 3.0 - 0.5 * n


# --- constants ---
@lru_cache(maxsize=64)
def minus_constant(n: int) -> float:
    """Coefficient of |Delta|^{1/3 - n/2} for F_- in D_-."""
    return 3.0**n * _GAMMA_43 * rgamma(4.0 / 3.0 - 0.5 * n) / (2.0 ** (2.0 / 3.0) * math.pi ** (0.5 * n))


@lru_cache(maxsize=64)
def sharp_constants(n: int) -> tuple[float, float]:
    """(D_+, D_-) coefficients of F_sharp."""
    common = 3.0 ** (n - 2) * math.pi ** (-0.5 * n) * gamma(0.5 * n - 1.0 / 3.0) / _GAMMA_23
    plus = -(2.0 ** (-2.0 / 3.0)) * common
    minus = -_COS_HALF_PI[n % 4] * 2.0 ** (1.0 / 3.0) * common
    return plus, minus


def ab_constants(n: int) -> ABConstants:
    """A and B with F_+ = 3 F_sharp - 2 F_- for even n = 2k; 3A - 2B vanishes."""
    if n < 2 or n % 2:
        raise ParityError(f"A and B are defined for even n >= 2, got {n}")
    k = n // 2
    sign = (-1.0) ** (k + 1)
    a = sign * 2.0 ** (1.0 / 3.0) * 3.0 ** (2 * (k - 1)) * math.pi**-k * gamma(k - 1.0 / 3.0) / _GAMMA_23
    b = 3.0 ** (2 * k) * _GAMMA_43 / (2.0 ** (2.0 / 3.0) * math.pi**k * gamma(4.0 / 3.0 - k))
    b_reflected = sign * 3.0 ** (2 * k - 1) * gamma(k - 1.0 / 3.0) / (2.0 ** (2.0 / 3.0) * math.pi**k * _GAMMA_23)
    if not math.isclose(b, b_reflected, rel_tol=1e-12):
        raise ConvergenceError(f"the two forms of B disagree for n = {n}: {b!r} vs {b_reflected!r}")
    return ABConstants(a=a, b=b, b_reflected=b_reflected)


def dimension_constants(n: int) -> DimensionConstants:
    if n < 1:
        raise DomainError("n must be >= 1")
    sharp_plus, sharp_minus = sharp_constants(n)
    return DimensionConstants(
        n=n, minus=minus_constant(n), sharp_plus=sharp_plus, sharp_minus=sharp_minus,
        homogeneity_degree=homogeneity_degree(n), ab=ab_constants(n) if n % 2 == 0 else None,
    )


# --- physical-space values ---
def fundamental_values(kind: FundamentalSolution, n: int, delta):
    """F(x, y) from Delta values; every Delta must be nonzero."""
    arr = np.asarray(delta, dtype=float)
    if np.any(arr == 0.0):
        raise SingularLocusError("fundamental solutions are singular on the cone")
    power = np.abs(arr) ** _exponent(n)
    plus = arr > 0
    sharp_plus, sharp_minus = sharp_constants(n)
    minus = minus_constant(n)
    if kind == FundamentalSolution.F_MINUS:
        out = np.where(plus, 0.0, minus * power)
    elif kind == FundamentalSolution.F_SHARP:
        out = np.where(plus, sharp_plus, sharp_minus) * power
    elif n % 2:
        out = np.where(plus, sharp_plus, sharp_minus) * power
    else:
        # even n: 3 F_sharp - 2 F_-, whose D_- part cancels
        out = np.where(plus, 3.0 * sharp_plus, 3.0 * sharp_minus - 2.0 * minus) * power
    return float(out) if out.ndim == 0 else out


def _value(kind: FundamentalSolution, n: int, p: SpacetimePoint, cone_tol: float | None) -> float:
    if n != p.n:
        raise DomainError(f"point has {p.n} spatial coordinates, expected {n}")
    if classify(p, cone_tol) == Region.CONE:
        raise SingularLocusError(f"({p.x}, {p.y}) lies on the characteristic cone (singular locus)")
    return fundamental_values(kind, n, p.discriminant)


def f_minus(n: int, p: SpacetimePoint, cone_tol: float | None = None) -> float:
    """Fundamental solution supported in the closure of D_-."""
    return _value(FundamentalSolution.F_MINUS, n, p, cone_tol)


def f_sharp(n: int, p: SpacetimePoint, cone_tol: float | None = None) -> float:
    return _value(FundamentalSolution.F_SHARP, n, p, cone_tol)


def f_plus(n: int, p: SpacetimePoint, cone_tol: float | None = None) -> float:
    """Fundamental solution supported in the closure of D_+."""
    return _value(FundamentalSolution.F_PLUS, n, p, cone_tol)


def evaluate(quantity: Quantity, n: int, p: SpacetimePoint, cone_tol: float | None = None) -> EvalResult:
    region = classify(p, cone_tol)
    if quantity == Quantity.REGION:
        value: float | str = region.value
    elif quantity == Quantity.DISCRIMINANT:
        value = p.discriminant
    else:
        value = _value(FundamentalSolution(quantity.value), n, p, cone_tol)
    return EvalResult(n=n, x=list(p.x), y=p.y, quantity=quantity, discriminant=p.discriminant,
                      region=region, value=value)


def tricomi_terms_fd(kind: FundamentalSolution, n: int, p: SpacetimePoint, h: float) -> tuple[float, float]:
    """(y * sum_i F_{x_i x_i}, F_yy) at p by fourth-order central differences."""
    weights = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / (12.0 * h * h)
    steps = np.arange(-2, 3) * h
    x = np.array(p.x)

    laplacian = 0.0
    for i in range(n):
        shifted = np.tile(x, (5, 1))
        shifted[:, i] += steps
        delta = discriminant(np.linalg.norm(shifted, axis=1), p.y)
        laplacian += float(weights @ fundamental_values(kind, n, delta))
    delta_y = discriminant(np.linalg.norm(x), p.y + steps)
    second_y = float(weights @ fundamental_values(kind, n, delta_y))
    return p.y * laplacian, second_y


def tricomi_residual_fd(kind: FundamentalSolution, n: int, p: SpacetimePoint, h: float = 1e-3) -> float:
    """(y Laplace_x + d^2/dy^2) F at an off-cone point, by finite differences."""
    spatial, temporal = tricomi_terms_fd(kind, n, p, h)
    return spatial + temporal


# --- spectral side ---
@lru_cache(maxsize=8)
def construction_constants(construction: Construction) -> dict[str, float]:
    if construction == Construction.AIRY_TWO_SIDED:
        return {"scale": -math.pi}
    if construction == Construction.ORIGIN_AI_BI:
        return {
            "alpha": -1.0 / (2.0 ** (1.0 / 3.0) * 3.0 ** (1.0 / 3.0) * _GAMMA_23),
            "beta": -math.pi / (2.0 ** (1.0 / 3.0) * 3.0 ** (5.0 / 6.0) * _GAMMA_23),
        }
    if construction == Construction.MINUS_ONLY:
        return {"minus": 3.0 ** (2.0 / 3.0) * _GAMMA_43 / 2.0 ** (1.0 / 3.0)}
    return {
        "gamma": -(2.0 ** (2.0 / 3.0)) / (3.0 ** (4.0 / 3.0) * _GAMMA_23),
        "delta": 2.0 * math.pi / (2.0 ** (1.0 / 3.0) * 3.0 ** (4.0 / 3.0) * _GAMMA_23),
    }


def make_spectral_green(construction: Construction, b_offset: float = 0.0) -> SpectralGreen:
    return SpectralGreen(construction=construction, b_offset=b_offset,
                         constants=construction_constants(construction))


def _airy_two_sided(c: dict[str, float], xi: float, b: float, y: np.ndarray, above: np.ndarray) -> np.ndarray:
    scale = xi ** (2.0 / 3.0)
    zb, zy = scale * b, scale * y
    upper = airy_bi(zb) * np.asarray(airy_ai(zy))
    lower = airy_ai(zb) * np.asarray(airy_bi(zy))
    return c["scale"] / scale * np.where(above, upper, lower)


def _upper_lower(y: np.ndarray, above: np.ndarray, upper, lower) -> np.ndarray:
    """Evaluate upper(s) where above and lower(t) elsewhere, s and t the substituted times."""
    out = np.empty_like(y)
    if np.any(above):
        out[above] = upper(2.0 / 3.0 * np.maximum(y[above], 0.0) ** 1.5)
    if np.any(~above):
        out[~above] = lower(2.0 / 3.0 * np.maximum(-y[~above], 0.0) ** 1.5)
    return out


def spectral_green(g: SpectralGreen, xi_norm: float, y, branch: Branch | None = None):
    """F~(xi, y), the partial Fourier transform of the construction at |xi| = xi_norm.

    `branch` forces the formula of one side, for one-sided limits at the source.
    """
    if not xi_norm > 0:
        raise DomainError(f"xi_norm must be > 0, got {xi_norm}")
    arr = np.atleast_1d(np.asarray(y, dtype=float))
    b = g.b_offset
    if branch is None:
        above = arr >= b
    else:
        above = np.full(arr.shape, branch == "above")
    c = g.constants or construction_constants(g.construction)
    xi = float(xi_norm)
    factor = xi ** (-2.0 / 3.0)

    if g.construction == Construction.AIRY_TWO_SIDED:
        out = _airy_two_sided(c, xi, b, arr, above)
    elif g.construction == Construction.ORIGIN_AI_BI:
        out = factor * _upper_lower(
            arr, above,
            lambda s: c["alpha"] * np.asarray(bessel_k_scaled(1.0 / 3.0, s * xi)),
            lambda t: c["beta"] * (np.asarray(bessel_j_scaled(-1.0 / 3.0, t * xi))
                                   - np.asarray(bessel_j_scaled(1.0 / 3.0, t * xi))),
        )
    elif g.construction == Construction.MINUS_ONLY:
        out = factor * _upper_lower(
            arr, above,
            lambda s: np.zeros_like(s),
            lambda t: c["minus"] * np.asarray(bessel_j_scaled(1.0 / 3.0, t * xi)),
        )
    else:
        out = factor * _upper_lower(
            arr, above,
            lambda s: c["gamma"] * np.asarray(bessel_k_scaled(1.0 / 3.0, s * xi)),
            lambda t: c["delta"] * np.asarray(neumann_n_scaled(-1.0 / 3.0, t * xi)),
        )
    return float(out[0]) if np.ndim(y) == 0 else out


def substituted_time(y: float) -> SubstitutedTime:
    return SubstitutedTime.from_y(y)


def spectral_jump(g: SpectralGreen, xi_norm: float, h: float = 1e-3) -> JumpDiagnostics:
    """One-sided values and fourth-order one-sided y-slopes at the source y = b."""
    b = g.b_offset
    steps = np.arange(5) * h
    weights = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / (12.0 * h)
    above = np.asarray(spectral_green(g, xi_norm, b + steps, branch="above"))
    below = np.asarray(spectral_green(g, xi_norm, b - steps, branch="below"))
    return JumpDiagnostics(
        value_above=float(above[0]), value_below=float(below[0]),
        slope_above=float(weights @ above), slope_below=-float(weights @ below),
    )


def spectral_ode_residual(g: SpectralGreen, xi_norm: float, y: float, h: float = 1e-3) -> float:
    """|F~_yy - y |xi|^2 F~| relative to the larger of the two terms."""
    values = np.asarray(spectral_green(g, xi_norm, y + np.arange(-2, 3) * h))
    second = float(np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) @ values) / (12.0 * h * h)
    potential = y * xi_norm**2 * float(values[2])
    scale = max(abs(second), abs(potential))
    return abs(second - potential) / scale if scale > 0 else 0.0


def airy_pair_wronskian(xi_norm: float, y: float) -> float:
    """W(U_1, U_2) in y for U_1 = sqrt(pi) |xi|^{-1/3} Ai(|xi|^{2/3} y), U_2 = -sqrt(pi) |xi|^{-1/3} Bi(...)."""
    if not xi_norm > 0:
        raise DomainError(f"xi_norm must be > 0, got {xi_norm}")
    scale = xi_norm ** (2.0 / 3.0)
    z = scale * y
    amplitude = math.sqrt(math.pi) * xi_norm ** (-1.0 / 3.0)
    u1, u1_prime = amplitude * airy_ai(z), amplitude * scale * airy_ai_prime(z)
    u2, u2_prime = -amplitude * airy_bi(z), -amplitude * scale * airy_bi_prime(z)
    return u1 * u2_prime - u1_prime * u2
