# tricomi/schemas/grid.py
import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tricomi.schemas.common import Quantity


class AxisSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    min: float
    max: float
    count: int = Field(..., ge=2)

    @model_validator(mode="after")
    def _finite_bounds(self) -> "AxisSpec":
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise ValueError("axis bounds must be finite")
        return self


class GridSpec(BaseModel):
    """Rectangular (|x|, y) grid; x runs along the first spatial axis."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    x_axis: AxisSpec
    y_axis: AxisSpec
    quantity: Quantity


class GridRow(BaseModel):
    x: float
    y: float
    discriminant: float
    region: str
    value: float | str | None = None
