# tricomi/services/verify.py
"""Verification harness: bump pairings plus the named invariant suites."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import TextIO

from tricomi.core.config import settings
from tricomi.core.errors import ParameterError
from tricomi.schemas.verify import VerificationReport
from tricomi.services.checks import SUITES
from tricomi.services.pairing import apply_tricomi, bump_value, delta_pairing, pairing_integral

__all__ = ["SUITES", "apply_tricomi", "bump_value", "delta_pairing", "pairing_integral", "resolve_selection",
           "run_suite", "suite_names"]

log = logging.getLogger(__name__)


def suite_names() -> list[str]:
    return list(SUITES)


def resolve_selection(selection: list[str]) -> list[str]:
    """Expand "all" and reject unknown names; order is preserved, duplicates dropped."""
    names: list[str] = []
    for item in selection:
        expanded = suite_names() if item == "all" else [item]
        for name in expanded:
            if name not in SUITES:
                raise ParameterError(f"unknown suite '{name}'; known suites: {', '.join(SUITES)}")
            if name not in names:
                names.append(name)
    return names


def _run_one(name: str) -> list[VerificationReport]:
    log.info(f"Running suite {name}")
    reports = SUITES[name]()
    failed = sum(not r.passed for r in reports)
    log.info(f"Suite {name}: {len(reports) - failed}/{len(reports)} passed")
    return reports


def run_suite(selection: list[str], sink: TextIO | None = None, threads: int | None = None) -> list[VerificationReport]:
    """Run the selected suites; reports come back in selection order.

    Each report is also written to `sink` as one JSON object per line.
    """
    names = resolve_selection(selection)
    if not names:
        return []
    workers = max(1, threads or settings.THREADS)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        batches = list(pool.map(_run_one, names))
    reports = [report for batch in batches for report in batch]
    if sink is not None:
        for report in reports:
            sink.write(report.model_dump_json() + "\n")
    return reports
