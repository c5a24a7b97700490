from __future__ import annotations

import csv
import json
from typing import IO, Any, Callable, Dict, Iterable, List, Optional, Union

from ..errors import EmitError
from .models import OutputFormat, RecordStatus, ScanConfig, ScanKind, ScanRecord, ScanSummary

CSV_COLUMNS = [
    "kind",
    "beta_a",
    "beta_b",
    "beta_c",
    "sign_a",
    "sign_b",
    "sign_c",
    "mode",
    "holds",
    "worst_margin",
    "margin_0",
    "margin_1",
    "margin_2",
    "margin_3",
    "status",
]

MAX_MARGINS = 4

SummarySource = Union[ScanSummary, Callable[[], ScanSummary]]


def _config_echo(config: Optional[ScanConfig]) -> Dict[str, Any]:
    """Sign and mode cells a scan config fixes for every point."""
    if config is None:
        return {}
    echo: Dict[str, Any] = {}
    if config.uses_signs:
        for key, sign in zip(("sign_a", "sign_b", "sign_c"), config.signs):
            echo[key] = sign.value
    if config.kind is ScanKind.MATRIX:
        echo["mode"] = config.mode.value
    return echo


def record_fields(record: ScanRecord, config: Optional[ScanConfig] = None) -> Dict[str, Any]:
    """
    Flat field mapping shared by the CSV rows and the JSON records.

    Records without a verdict take their sign and mode cells from `config`.
    """
    verdict = record.verdict
    echo = verdict.inputs_echo if verdict is not None else _config_echo(config)
    margins: List[Optional[float]] = list(verdict.margins) if verdict is not None else []
    margins += [None] * (MAX_MARGINS - len(margins))

    fields: Dict[str, Any] = {
        "kind": record.kind.value,
        "beta_a": record.angles[0],
        "beta_b": record.angles[1],
        "beta_c": record.angles[2],
        "sign_a": echo.get("sign_a"),
        "sign_b": echo.get("sign_b"),
        "sign_c": echo.get("sign_c"),
        "mode": echo.get("mode"),
        "holds": verdict.holds if verdict is not None else None,
        "worst_margin": verdict.worst_margin if verdict is not None else None,
    }
    for n, margin in enumerate(margins):
        fields[f"margin_{n}"] = margin
    fields["status"] = record.status.value
    return fields


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _resolve(summary: SummarySource) -> ScanSummary:
    return summary() if callable(summary) else summary


def _emit_csv(records: Iterable[ScanRecord], sink: IO[str], config: Optional[ScanConfig]) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        fields = record_fields(record, config)
        writer.writerow([_csv_cell(fields[column]) for column in CSV_COLUMNS])


def _emit_json(
    records: Iterable[ScanRecord],
    summary: SummarySource,
    sink: IO[str],
    config: Optional[ScanConfig],
) -> None:
    config_data = config.model_dump(mode="json", exclude={"workers"}) if config is not None else None
    sink.write('{"config": ' + json.dumps(config_data) + ', "records": [')
    first = True
    for record in records:
        payload = {"indices": list(record.indices), **record_fields(record, config)}
        if record.status is RecordStatus.NOT_COMPARABLE:
            payload["message"] = record.message
        sink.write(("\n" if first else ",\n") + json.dumps(payload))
        first = False
    summary_data = _resolve(summary).model_dump(mode="json")
    sink.write("\n" if not first else "")
    sink.write('], "summary": ' + json.dumps(summary_data) + "}\n")


def emit(
    records: Iterable[ScanRecord],
    summary: SummarySource,
    output_format: OutputFormat,
    sink: IO[str],
    config: Optional[ScanConfig] = None,
) -> None:
    """
    Write scan records as CSV or JSON.

    `summary` may be a callable so that streamed records are tallied before
    the summary is read.

    Raises:
        EmitError: the sink could not be written
    """
    output_format = OutputFormat(output_format)
    try:
        if output_format is OutputFormat.CSV:
            _emit_csv(records, sink, config)
            _resolve(summary)
        else:
            _emit_json(records, summary, sink, config)
        sink.flush()
    except OSError as exc:
        raise EmitError(f"Failed to write scan output: {exc}") from exc
