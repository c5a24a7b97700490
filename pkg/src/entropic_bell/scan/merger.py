"""
Scan configuration merging

Combines a YAML scan file with the flags given on the command line. A flag
left unset arrives as None and keeps the file's value. Ranges are merged per
angle: an angle named on the command line takes its range from there in full,
while the other angles keep the file's ranges.
"""

from __future__ import annotations

from typing import Any, Dict, Mapping, Optional

RANGES_KEY = "ranges"


def _merge_ranges(
    file_ranges: Optional[Mapping[str, Any]], flag_ranges: Mapping[str, Any]
) -> Dict[str, Any]:
    ranges = dict(file_ranges or {})
    for angle, spec in flag_ranges.items():
        if spec is not None:
            ranges[angle] = dict(spec)
    return ranges


def merge_config(
    base: Optional[Mapping[str, Any]], overrides: Optional[Mapping[str, Any]]
) -> Dict[str, Any]:
    """Settings from `base` with every non-None entry of `overrides` applied."""
    merged: Dict[str, Any] = dict(base or {})
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key == RANGES_KEY:
            merged[key] = _merge_ranges(merged.get(key), value)
        else:
            merged[key] = value
    return merged
