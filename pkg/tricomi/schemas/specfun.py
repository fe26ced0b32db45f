# tricomi/schemas/specfun.py
from pydantic import BaseModel, ConfigDict, Field


class SeriesPolicy(BaseModel):
    """Truncation and method switch for the Bessel-type series."""
    model_config = ConfigDict(frozen=True)

    truncation_tol: float = Field(1e-16, gt=0)
    max_terms: int = Field(500, ge=8)
    switchover_radius: float = Field(12.0, gt=0) # asymptotics above this argument
    k_series_radius: float = Field(2.0, gt=0) # K uses the I-difference below this argument
