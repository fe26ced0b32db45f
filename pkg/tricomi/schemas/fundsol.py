# tricomi/schemas/fundsol.py
import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tricomi.schemas.common import Construction, Quantity, Region


class SpacetimePoint(BaseModel):
    """A point (x, y) of R^{n+1} with its cached discriminant 9|x|^2 + 4y^3."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    x: tuple[float, ...] = Field(..., min_length=1)
    y: float
    discriminant: float = 0.0

    @model_validator(mode="before")
    @classmethod
    def _cache_discriminant(cls, data: Any) -> Any:
        if isinstance(data, dict) and "x" in data and "y" in data:
            x = tuple(float(v) for v in data["x"])
            y = float(data["y"])
            data = {**data, "x": x, "discriminant": 9.0 * math.fsum(v * v for v in x) + 4.0 * y**3}
        return data

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def radius(self) -> float:
        return math.hypot(*self.x)

    @classmethod
    def on_ray(cls, n: int, radius: float, y: float) -> "SpacetimePoint":
        """Point at distance `radius` along the first spatial axis."""
        return cls(x=(radius,) + (0.0,) * (n - 1), y=y)


class SubstitutedTime(BaseModel):
    """s = (2/3) y^{3/2} above the hyperplane, t = (2/3)(-y)^{3/2} below it."""
    model_config = ConfigDict(frozen=True)

    s: float = Field(0.0, ge=0)
    t: float = Field(0.0, ge=0)

    @classmethod
    def from_y(cls, y: float) -> "SubstitutedTime":
        if y >= 0:
            return cls(s=2.0 / 3.0 * y**1.5)
        return cls(t=2.0 / 3.0 * (-y) ** 1.5)


class SpectralGreen(BaseModel):
    model_config = ConfigDict(frozen=True)

    construction: Construction
    b_offset: float = 0.0
    constants: dict[str, float] = {}

    @model_validator(mode="after")
    def _offset_only_for_airy(self) -> "SpectralGreen":
        if self.b_offset != 0.0 and self.construction != Construction.AIRY_TWO_SIDED:
            raise ValueError("only the two-sided Airy construction admits b_offset != 0")
        return self


class JumpDiagnostics(BaseModel):
    value_above: float
    value_below: float
    slope_above: float
    slope_below: float

    @property
    def value_gap(self) -> float:
        return abs(self.value_above - self.value_below)

    @property
    def slope_jump(self) -> float:
        return self.slope_above - self.slope_below


class ABConstants(BaseModel):
    a: float
    b: float
    b_reflected: float


class DimensionConstants(BaseModel):
    n: int
    minus: float # F_- coefficient in D_-
    sharp_plus: float
    sharp_minus: float
    homogeneity_degree: float
    ab: ABConstants | None = None


class EvalResult(BaseModel):
    n: int
    x: list[float]
    y: float
    quantity: Quantity
    discriminant: float
    region: Region
    value: float | str
