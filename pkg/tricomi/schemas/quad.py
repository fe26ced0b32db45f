# tricomi/schemas/quad.py
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class QuadSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(1e-12, gt=0)
    rel_tol: float = Field(1e-10, gt=0)
    max_subdivisions: int = Field(12, ge=1) # tanh-sinh halvings, or pairing levels

    def target(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


class QuadResult(BaseModel):
    value: float
    error: float
    evaluations: int = 0
    subdivisions: int = 0 # final level, or number of panels for tails


class EpsSchedule(BaseModel):
    """Descending ladder of damping parameters for the e^{-eps t} converging factor."""
    model_config = ConfigDict(frozen=True)

    eps_values: tuple[float, ...]
    extrapolation_order: int = Field(3, ge=1)

    @field_validator("eps_values")
    @classmethod
    def _descending_positive(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if any(e <= 0 for e in v):
            raise ValueError("eps values must be positive")
        if any(b >= a for a, b in zip(v, v[1:])):
            raise ValueError("eps values must be strictly decreasing")
        return v

    @model_validator(mode="after")
    def _long_enough(self) -> "EpsSchedule":
        if len(self.eps_values) < self.extrapolation_order + 1:
            raise ValueError("schedule needs at least extrapolation_order + 1 values")
        return self

    @classmethod
    def geometric(cls, start: float, count: int, order: int) -> "EpsSchedule":
        return cls(eps_values=tuple(start * 2.0**-k for k in range(count)), extrapolation_order=order)


class ExtrapolationResult(BaseModel):
    value: float
    error: float
    corrections: list[float] = [] # |T_k - T_{k-1}| along the last tableau row
