# tricomi/schemas/radialft.py
from pydantic import BaseModel, ConfigDict, Field, model_validator

from tricomi.schemas.common import RadialKind


class RadialFtSpec(BaseModel):
    """Inverse Fourier transform of the radial profile g(scale * |xi|) in R^n.

    Convention: inverse transform (2 pi)^{-n} * integral of e^{+i<x, xi>}.
    """
    model_config = ConfigDict(frozen=True)

    kind: RadialKind
    nu: float
    n: int = Field(..., ge=1)
    scale: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def _admissible_order(self) -> "RadialFtSpec":
        if not abs(self.nu) < 0.5:
            raise ValueError("transform formulas need |nu| < 1/2")
        if self.kind == RadialKind.N_NU and self.nu == 0.0:
            raise ValueError("N-kind needs a non-integer order")
        return self

    @property
    def has_jump(self) -> bool:
        return self.kind != RadialKind.K_NU


class WsIntegralSpec(BaseModel):
    """Parameters of I_eps(a, b) = int_0^inf e^{-eps t} t^{-lambda} J_mu(a t) J_nu(b t) dt."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lam: float = Field(..., alias="lambda")
    mu: float
    nu: float
    a: float = Field(..., gt=0)
    b: float = Field(..., gt=0)

    @model_validator(mode="after")
    def _convergent(self) -> "WsIntegralSpec":
        if not self.mu + self.nu + 1 > self.lam:
            raise ValueError("need mu + nu + 1 > lambda at the origin")
        return self

    # Hypergeometric indices of the b < a branch
    @property
    def alpha(self) -> float:
        return 0.5 * (self.mu + self.nu - self.lam + 1)

    @property
    def beta(self) -> float:
        return 0.5 * (self.nu - self.lam - self.mu + 1)

    @property
    def gamma_c(self) -> float:
        return self.nu + 1

    def swapped(self) -> "WsIntegralSpec":
        """Same integral with (a, mu) and (b, nu) exchanged."""
        return WsIntegralSpec(lam=self.lam, mu=self.nu, nu=self.mu, a=self.b, b=self.a)


class NumericTransform(BaseModel):
    value: float
    error: float
    eps_values: list[float] = []
    samples: list[float] = []
