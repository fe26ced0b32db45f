# tricomi/services/grid.py
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from tricomi.core.config import settings
from tricomi.schemas.common import FundamentalSolution, Quantity, Region
from tricomi.schemas.grid import GridRow, GridSpec
from tricomi.services.fundsol import discriminant, fundamental_values

log = logging.getLogger(__name__)

COLUMNS = ["x", "y", "discriminant", "region", "value"]


def _regions(delta: np.ndarray, radius: np.ndarray, y: np.ndarray) -> np.ndarray:
    tol = settings.CONE_TOL * (1.0 + 9.0 * radius**2 + 4.0 * np.abs(y) ** 3)
    return np.where(delta > tol, Region.DPLUS.value, np.where(delta < -tol, Region.DMINUS.value, Region.CONE.value))


def build_grid(spec: GridSpec) -> pd.DataFrame:
    """Evaluate the quantity on the (|x|, y) grid; y is the outer loop. Cone cells get no value."""
    xs = np.linspace(spec.x_axis.min, spec.x_axis.max, spec.x_axis.count)
    ys = np.linspace(spec.y_axis.min, spec.y_axis.max, spec.y_axis.count)
    y, x = (a.ravel() for a in np.meshgrid(ys, xs, indexing="ij"))
    radius = np.abs(x)
    delta = discriminant(radius, y)
    regions = _regions(delta, radius, y)
    on_cone = regions == Region.CONE.value

    if spec.quantity == Quantity.REGION:
        values = pd.Series(regions, dtype=object)
    elif spec.quantity == Quantity.DISCRIMINANT:
        values = pd.Series(delta)
    else:
        numbers = np.full(delta.shape, np.nan)
        safe = np.where(on_cone, 1.0, delta)
        numbers[~on_cone] = np.asarray(
            fundamental_values(FundamentalSolution(spec.quantity.value), spec.n, safe))[~on_cone]
        values = pd.Series(numbers)

    frame = pd.DataFrame({"x": x, "y": y, "discriminant": delta, "region": regions, "value": values})
    log.info(f"Built {spec.quantity.value} grid n={spec.n}: {len(frame)} cells, {int(on_cone.sum())} on the cone")
    return frame[COLUMNS]


def grid_rows(frame: pd.DataFrame) -> list[GridRow]:
    rows = []
    for record in frame.to_dict(orient="records"):
        value = record["value"]
        if isinstance(value, float) and np.isnan(value):
            value = None
        rows.append(GridRow(x=record["x"], y=record["y"], discriminant=record["discriminant"],
                            region=record["region"], value=value))
    return rows


def write_grid_csv(frame: pd.DataFrame, path: str | Path) -> None:
    """Byte-stable CSV: 15 significant digits, empty cells for missing values, LF line endings."""
    frame.to_csv(path, index=False, float_format="%.15g", na_rep="", lineterminator="\n")
