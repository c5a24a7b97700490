"""
Reports

Renders the text reports printed by the CLI from the packaged jinja2
templates, and the JSON payloads printed under `--format json`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
from jinja2 import Environment, FileSystemLoader, StrictUndefined

from .models import GeneralMatrix

TEMPLATES_DIR = Path(__file__).parent / "resources" / "templates"


def format_complex(value: complex, digits: int = 12) -> str:
    """a + bi with the imaginary part dropped when it is zero."""
    value = complex(value)
    real = format(value.real + 0.0, f".{digits}g")
    if value.imag == 0.0:
        return real
    sign = "-" if value.imag < 0 else "+"
    return f"{real} {sign} {format(abs(value.imag), f'.{digits}g')}i"


def format_matrix(matrix: Any, digits: int = 12, indent: int = 2) -> str:
    entries = matrix.entries if isinstance(matrix, GeneralMatrix) else np.asarray(matrix)
    cells = [[format_complex(z, digits) for z in row] for row in entries]
    width = max(len(cell) for row in cells for cell in row)
    pad = " " * indent
    return "\n".join(pad + "[ " + "  ".join(cell.rjust(width) for cell in row) + " ]" for row in cells)


class ReportRenderer:
    """Loads the packaged text templates."""

    def __init__(self, templates_dir: Optional[Path] = None):
        self.templates_dir = templates_dir or TEMPLATES_DIR
        self.env = Environment(
            loader=FileSystemLoader(str(self.templates_dir)),
            autoescape=False,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
            undefined=StrictUndefined,
        )
        self.env.filters["cplx"] = format_complex
        self.env.filters["matrix"] = format_matrix
        self.env.filters["num"] = lambda x: format(float(x), ".12g")

    def render(self, template_name: str, **context) -> str:
        template = self.env.get_template(f"{template_name}.txt.j2")
        return template.render(**context)


def matrix_payload(matrix: GeneralMatrix) -> Dict[str, Any]:
    return {
        "entries": matrix.to_pairs(),
        "hermitian": matrix.is_hermitian(),
        "trace": [matrix.trace.real, matrix.trace.imag],
        "det": [matrix.det.real, matrix.det.imag],
    }


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2)
