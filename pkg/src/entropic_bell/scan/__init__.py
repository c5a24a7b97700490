from __future__ import annotations

from .config import build_config, load_config_file
from .merger import merge_config
from .emitter import CSV_COLUMNS, emit
from .models import (
    OutputFormat,
    RangeSpec,
    RecordStatus,
    ScanConfig,
    ScanKind,
    ScanRecord,
    ScanSummary,
)
from .runner import ScanRun, run_scan

__all__ = [
    "CSV_COLUMNS",
    "OutputFormat",
    "RangeSpec",
    "RecordStatus",
    "ScanConfig",
    "ScanKind",
    "ScanRecord",
    "ScanRun",
    "ScanSummary",
    "build_config",
    "emit",
    "load_config_file",
    "merge_config",
    "run_scan",
]
