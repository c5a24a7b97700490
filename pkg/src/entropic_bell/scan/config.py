from __future__ import annotations

from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import ValidationError

from ..errors import ConfigError
from .models import ScanConfig


def parse_config_text(text: str) -> Dict[str, Any]:
    """Parse a YAML scan configuration into a mapping."""
    if not text.strip():
        return {}
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"Invalid YAML in scan configuration: {exc}") from exc

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("Scan configuration must be a mapping")
    return data


def load_config_file(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise ConfigError(f"Scan configuration not found: {path}")
    return parse_config_text(path.read_text())


def build_config(data: Dict[str, Any]) -> ScanConfig:
    """Validate a configuration mapping."""
    try:
        return ScanConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc

