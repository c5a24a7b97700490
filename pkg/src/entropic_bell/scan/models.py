from __future__ import annotations

from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from ..errors import InvalidInputError
from ..inequality import IneqVerdict, MatrixMode, VerdictKind
from ..models import Sign, Units, parse_angle
from ..tolerances import DEFAULT_STEP, FULL_TURN

ANGLE_KEYS = ("a", "b", "c")


def _checked_angle(value) -> float:
    # pydantic only reports ValueError as a validation failure
    try:
        return parse_angle(value)
    except InvalidInputError as exc:
        raise ValueError(str(exc)) from exc


class ScanKind(str, Enum):
    WIGNER_PROB = "wigner_prob"
    MATRIX = "matrix"
    ENTROPIC = "entropic"
    CERF_ADAMI = "cerf_adami"


KIND_ALIASES = {"wigner": "wigner_prob", "entropy": "entropic"}


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RecordStatus(str, Enum):
    OK = "ok"
    NOT_COMPARABLE = "not_comparable"


class RangeSpec(BaseModel):
    """Grid start + k * step over [start, stop), or [start, stop] when closed."""

    start: float = 0.0
    stop: float = FULL_TURN
    step: Optional[float] = None
    closed: bool = False

    @field_validator("start", "stop", "step", mode="before")
    @classmethod
    def _angle(cls, value):
        return None if value is None else _checked_angle(value)

    @field_validator("step")
    @classmethod
    def _positive_step(cls, value):
        if value is not None and value <= 0:
            raise ValueError("step must be positive")
        return value

    @model_validator(mode="after")
    def _ordered(self) -> "RangeSpec":
        if self.start > self.stop:
            raise ValueError(f"start ({self.start}) must not exceed stop ({self.stop})")
        return self

    @classmethod
    def point(cls, value: float) -> "RangeSpec":
        return cls(start=value, stop=value, closed=True)


class ScanConfig(BaseModel):
    kind: ScanKind
    ranges: Dict[str, RangeSpec] = Field(default_factory=dict)
    step: float = DEFAULT_STEP
    signs: Tuple[Sign, Sign, Sign] = (Sign.PLUS, Sign.PLUS, Sign.PLUS)
    mode: MatrixMode = MatrixMode.ENTRYWISE
    alpha: float = 0.0
    units: Units = Units.NATS
    coplanar: bool = False
    output_format: OutputFormat = OutputFormat.CSV
    workers: int = Field(default=1, ge=1)
    cross_check: bool = False

    @field_validator("kind", mode="before")
    @classmethod
    def _kind_alias(cls, value):
        if isinstance(value, str):
            value = value.strip().lower().replace("-", "_")
            return KIND_ALIASES.get(value, value)
        return value

    @field_validator("step", "alpha", mode="before")
    @classmethod
    def _angle(cls, value):
        return _checked_angle(value)

    @field_validator("step")
    @classmethod
    def _positive_step(cls, value):
        if value <= 0:
            raise ValueError("step must be positive")
        return value

    @field_validator("signs", mode="before")
    @classmethod
    def _signs(cls, value):
        if isinstance(value, str):
            value = list(value.replace(",", "").replace(" ", ""))
        try:
            return tuple(Sign.parse(s) for s in value)
        except InvalidInputError as exc:
            raise ValueError(str(exc)) from exc

    @field_validator("ranges")
    @classmethod
    def _range_keys(cls, value):
        unknown = sorted(set(value) - set(ANGLE_KEYS))
        if unknown:
            raise ValueError(f"Unknown range keys {unknown}; expected a subset of {list(ANGLE_KEYS)}")
        return value

    @model_validator(mode="after")
    def _kind_options(self) -> "ScanConfig":
        if self.alpha != 0.0 and self.kind is not ScanKind.MATRIX:
            raise ValueError(f"alpha applies to the matrix kind only, not {self.kind.value}")
        if self.coplanar and self.kind is not ScanKind.CERF_ADAMI:
            raise ValueError(f"coplanar applies to the cerf_adami kind only, not {self.kind.value}")
        return self

    @property
    def verdict_kind(self) -> VerdictKind:
        if self.kind is ScanKind.MATRIX:
            if self.mode is MatrixMode.LOEWNER:
                return VerdictKind.MATRIX_LOEWNER
            return VerdictKind.MATRIX_ENTRYWISE
        return VerdictKind(self.kind.value)

    @property
    def uses_signs(self) -> bool:
        return self.kind in {ScanKind.MATRIX, ScanKind.ENTROPIC}


class ScanRecord(BaseModel):
    indices: Tuple[int, int, int]
    angles: Tuple[float, float, float]
    kind: VerdictKind
    status: RecordStatus = RecordStatus.OK
    verdict: Optional[IneqVerdict] = None
    message: Optional[str] = None

    @model_validator(mode="after")
    def _verdict_present(self) -> "ScanRecord":
        if (self.status is RecordStatus.OK) != (self.verdict is not None):
            raise ValueError("ok records carry a verdict; not_comparable records do not")
        return self

    @property
    def is_violation(self) -> bool:
        return self.status is RecordStatus.OK and not self.verdict.holds


class Extremum(BaseModel):
    margin: float
    angles: Tuple[float, float, float]


class ScanSummary(BaseModel):
    total_points: int = 0
    violations: int = 0
    not_comparable: int = 0
    worst_violation: Optional[Extremum] = None
    largest_hold_margin: Optional[Extremum] = None

    @model_validator(mode="after")
    def _consistent(self) -> "ScanSummary":
        if self.violations > self.total_points:
            raise ValueError("violations cannot exceed total_points")
        if (self.worst_violation is not None) != (self.violations > 0):
            raise ValueError("worst_violation is present exactly when violations > 0")
        return self
