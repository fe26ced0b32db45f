# tricomi/schemas/hypergeom.py
import math

from pydantic import BaseModel, ConfigDict, field_validator


class Hyp2F1Params(BaseModel):
    """Arguments of F(a, b; c; z). Range checks (c poles, z <= 1) are done by the service."""
    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    c: float
    z: float

    @field_validator("a", "b", "c", "z")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("hypergeometric parameters must be finite")
        return v


class SeriesSum(BaseModel):
    value: float
    terms: int
