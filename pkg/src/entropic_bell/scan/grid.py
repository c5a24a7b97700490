from __future__ import annotations

import itertools
import math
from typing import Iterator, List, Tuple

from ..errors import ConfigError
from ..tolerances import MAX_GRID_POINTS
from .models import ANGLE_KEYS, RangeSpec, ScanConfig, ScanKind

# Fraction of a step within which a point counts as landing on `stop`.
ON_GRID_TOL = 1e-9

GridPoint = Tuple[Tuple[int, int, int], Tuple[float, float, float]]


def axis_count(spec: RangeSpec, default_step: float) -> int:
    step = spec.step or default_step
    if spec.stop == spec.start:
        return 1 if spec.closed else 0
    span = (spec.stop - spec.start) / step
    whole = int(math.floor(span + ON_GRID_TOL))
    if spec.closed:
        return whole + 1
    return whole + (1 if span - whole > ON_GRID_TOL else 0)


def axis_values(spec: RangeSpec, default_step: float) -> List[float]:
    step = spec.step or default_step
    return [spec.start + k * step for k in range(axis_count(spec, default_step))]


def swept_keys(config: ScanConfig) -> Tuple[str, ...]:
    """Angles that span a grid axis; the coplanar preset derives the third."""
    if config.kind is ScanKind.CERF_ADAMI and config.coplanar:
        return ANGLE_KEYS[:2]
    return ANGLE_KEYS


def range_for(config: ScanConfig, key: str) -> RangeSpec:
    return config.ranges.get(key) or RangeSpec()


def grid_size(config: ScanConfig) -> int:
    size = 1
    for key in swept_keys(config):
        size *= axis_count(range_for(config, key), config.step)
    return size


def check_grid_size(config: ScanConfig) -> int:
    size = grid_size(config)
    if size > MAX_GRID_POINTS:
        raise ConfigError(
            f"Scan grid has {size} points, more than the limit of {MAX_GRID_POINTS}"
        )
    return size


def iter_points(config: ScanConfig) -> Iterator[GridPoint]:
    """Grid points in lexicographic index order."""
    check_grid_size(config)
    axes = [
        list(enumerate(axis_values(range_for(config, key), config.step)))
        for key in swept_keys(config)
    ]

    for combo in itertools.product(*axes):
        indices = tuple(i for i, _ in combo)
        angles = tuple(value for _, value in combo)
        if len(combo) == 2:
            # coplanar preset: c = a + b on the third slot
            yield (indices[0], indices[1], 0), (angles[0], angles[1], angles[0] + angles[1])
        else:
            yield indices, angles
