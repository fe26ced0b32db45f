# tricomi/api/routers/verification.py
import logging

from fastapi import APIRouter, HTTPException, status
from fastapi.concurrency import run_in_threadpool

from tricomi.schemas.verify import VerificationReport
from tricomi.services import verify as verify_service
from tricomi.services.pairing import PAIRING_DIMENSION_NOTE

log = logging.getLogger(__name__)

router = APIRouter()


@router.get("/suites", response_model=list[str])
async def list_suites():
    return verify_service.suite_names()


@router.post(
    "/{suite}",
    response_model=list[VerificationReport],
    description=(
        "Run one named suite (or \"all\") and return its reports; failed checks are data, not errors. "
        + PAIRING_DIMENSION_NOTE
    ),
)
async def run_verification_suite(suite: str):
    if suite != "all" and suite not in verify_service.SUITES:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=f"Unknown suite '{suite}'.")
    log.info(f"Received verification request: {suite}")
    reports = await run_in_threadpool(verify_service.run_suite, [suite])
    log.info(f"Suite {suite}: {sum(r.passed for r in reports)}/{len(reports)} passed")
    return reports
