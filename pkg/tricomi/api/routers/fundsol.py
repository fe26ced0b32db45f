# tricomi/api/routers/fundsol.py
import logging

from fastapi import APIRouter, HTTPException, Query, status

from tricomi.core.errors import ConvergenceError, SingularLocusError, TricomiError
from tricomi.schemas.common import Quantity
from tricomi.schemas.fundsol import DimensionConstants, EvalResult, SpacetimePoint
from tricomi.schemas.grid import GridRow, GridSpec
from tricomi.services import fundsol as fundsol_service
from tricomi.services import grid as grid_service

log = logging.getLogger(__name__)

router = APIRouter()


def raise_http(e: TricomiError) -> None:
    """Maps library errors onto HTTP statuses."""
    if isinstance(e, SingularLocusError):
        raise HTTPException(status_code=status.HTTP_409_CONFLICT, detail=str(e)) from e
    if isinstance(e, ConvergenceError):
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e)) from e
    raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e)) from e


@router.get("/eval", response_model=EvalResult)
async def evaluate_point(
    n: int = Query(..., ge=1, description="Spatial dimension."),
    y: float = Query(..., description="Type-changing coordinate."),
    radius: float = Query(..., ge=0, description="|x|; the point is placed on the first spatial axis."),
    quantity: Quantity = Query(Quantity.F_MINUS),
):
    """
    Evaluate a fundamental solution, the discriminant or the region label at one point.
    """
    log.info(f"Received eval request: {quantity.value} n={n} |x|={radius} y={y}")
    try:
        return fundsol_service.evaluate(quantity, n, SpacetimePoint.on_ray(n, radius, y))
    except TricomiError as e:
        raise_http(e)


@router.post("/grid", response_model=list[GridRow])
async def evaluate_grid(spec: GridSpec):
    log.info(f"Received grid request: {spec.quantity.value} n={spec.n} "
             f"{spec.x_axis.count}x{spec.y_axis.count}")
    try:
        return grid_service.grid_rows(grid_service.build_grid(spec))
    except TricomiError as e:
        raise_http(e)


@router.get("/constants/{n}", response_model=DimensionConstants)
async def dimension_constants(n: int):
    """
    Coefficients of F_- and F_sharp in R^{n+1}, plus A and B for even n.
    """
    log.info(f"Received constants request for n={n}")
    try:
        return fundsol_service.dimension_constants(n)
    except TricomiError as e:
        raise_http(e)
