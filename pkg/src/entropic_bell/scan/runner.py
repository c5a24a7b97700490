"""
Scan runner

Evaluates one inequality checker over every point of an angle grid, serially
or in a process pool, and tallies a summary. Records always come out in
lexicographic grid-index order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterator, Optional

from ..errors import NotComparableError
from ..inequality import (
    IneqVerdict,
    check_cerf_adami,
    check_entropy,
    check_matrix,
    check_wigner_prob,
)
from .grid import GridPoint, check_grid_size, iter_points
from .models import Extremum, RecordStatus, ScanConfig, ScanKind, ScanRecord, ScanSummary

logger = logging.getLogger(__name__)

CHUNK_SIZE = 2048

_WORKER_CONFIG: Optional[ScanConfig] = None


def evaluate(config: ScanConfig, a: float, b: float, c: float) -> IneqVerdict:
    """Run the configured checker at one point."""
    sign_a, sign_b, sign_c = config.signs
    if config.kind is ScanKind.WIGNER_PROB:
        return check_wigner_prob(a, b, c)
    if config.kind is ScanKind.MATRIX:
        return check_matrix(a, b, c, sign_a, sign_b, sign_c, mode=config.mode, alpha=config.alpha)
    if config.kind is ScanKind.ENTROPIC:
        return check_entropy(a, b, c, sign_a, sign_b, sign_c, cross_check=config.cross_check)
    return check_cerf_adami(a, b, c, units=config.units)


def evaluate_point(config: ScanConfig, point: GridPoint) -> ScanRecord:
    indices, angles = point
    try:
        verdict = evaluate(config, *angles)
    except NotComparableError as exc:
        logger.debug("Point %s not comparable: %s", angles, exc)
        return ScanRecord(
            indices=indices,
            angles=angles,
            kind=config.verdict_kind,
            status=RecordStatus.NOT_COMPARABLE,
            message=str(exc),
        )
    return ScanRecord(indices=indices, angles=angles, kind=verdict.kind, verdict=verdict)


def _init_worker(config_data: Dict[str, Any]) -> None:
    global _WORKER_CONFIG
    _WORKER_CONFIG = ScanConfig.model_validate(config_data)


def _evaluate_in_worker(point: GridPoint) -> ScanRecord:
    return evaluate_point(_WORKER_CONFIG, point)


class SummaryTally:
    """Accumulates a ScanSummary; ties keep the earliest grid point."""

    def __init__(self):
        self.total_points = 0
        self.violations = 0
        self.not_comparable = 0
        self.worst_violation: Optional[Extremum] = None
        self.largest_hold_margin: Optional[Extremum] = None

    def add(self, record: ScanRecord) -> None:
        self.total_points += 1
        if record.status is RecordStatus.NOT_COMPARABLE:
            self.not_comparable += 1
            return

        margin = record.verdict.worst_margin
        if record.verdict.holds:
            if self.largest_hold_margin is None or margin > self.largest_hold_margin.margin:
                self.largest_hold_margin = Extremum(margin=margin, angles=record.angles)
        else:
            self.violations += 1
            if self.worst_violation is None or margin < self.worst_violation.margin:
                self.worst_violation = Extremum(margin=margin, angles=record.angles)

    def build(self) -> ScanSummary:
        return ScanSummary(
            total_points=self.total_points,
            violations=self.violations,
            not_comparable=self.not_comparable,
            worst_violation=self.worst_violation,
            largest_hold_margin=self.largest_hold_margin,
        )


class ScanRun:
    """
    A configured scan. Iterating yields records in grid order; `summary`
    finishes any remaining evaluation and returns the tally.
    """

    def __init__(self, config: ScanConfig):
        self.config = config
        self.total_points = check_grid_size(config)
        self._tally = SummaryTally()
        self._records: Optional[Iterator[ScanRecord]] = None
        self._finished = False

    def _evaluate_all(self) -> Iterator[ScanRecord]:
        points = iter_points(self.config)
        if self.config.workers == 1:
            for point in points:
                yield evaluate_point(self.config, point)
            return

        with ProcessPoolExecutor(
            max_workers=self.config.workers,
            initializer=_init_worker,
            initargs=(self.config.model_dump(mode="json"),),
        ) as pool:
            # map preserves submission order, so records stay in grid order
            yield from pool.map(_evaluate_in_worker, points, chunksize=CHUNK_SIZE)

    def __iter__(self) -> Iterator[ScanRecord]:
        if self._records is not None:
            raise RuntimeError("A ScanRun can only be iterated once; call run_scan again")
        logger.info(
            "Scanning %s over %d points with %d worker(s)",
            self.config.verdict_kind.value,
            self.total_points,
            self.config.workers,
        )
        self._records = self._evaluate_all()
        for record in self._records:
            self._tally.add(record)
            yield record
        self._finished = True
        logger.info(
            "Scan finished: %d violations, %d not comparable",
            self._tally.violations,
            self._tally.not_comparable,
        )

    @property
    def summary(self) -> ScanSummary:
        if not self._finished:
            if self._records is not None:
                raise RuntimeError("Scan summary requested before its records were consumed")
            for _ in self:
                pass
        return self._tally.build()


def run_scan(config: ScanConfig) -> ScanRun:
    """
    Prepare a scan of `config`.

    Raises:
        ConfigError: the grid exceeds the size guard
    """
    return ScanRun(config)
