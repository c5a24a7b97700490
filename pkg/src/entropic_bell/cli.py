"""
entropic-bell CLI

Command-line interface for spin-measurement density matrices, their
entropies and the Bell-type inequalities built from them.

Commands:
- density: Print a single-measurement density matrix
- mix: Print the 50-50 mixture of two measurements
- entropy: Von Neumann and thermodynamic entropy by both routes
- logm: Matrix logarithm with method and complexity report
- check: Single-point inequality verdict
- scan: Grid sweep producing a hold/violation map

Exit codes: 0 success or inequality holds, 2 violation detected,
1 usage or computation error.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click

from . import __version__
from .errors import ConfigError, EmitError, EntropicBellError, InvalidInputError
from .logger import setup_logger
from .models import Axis, GeneralMatrix, DensityMatrix, Sign, parse_angle

logger = logging.getLogger(__name__)

EXIT_VIOLATION = 2

CHECK_KINDS = {
    "wigner": "wigner_prob",
    "wigner_prob": "wigner_prob",
    "matrix": "matrix",
    "entropy": "entropic",
    "entropic": "entropic",
    "cerf-adami": "cerf_adami",
    "cerf_adami": "cerf_adami",
}


class ExitCodeGroup(click.Group):
    """Click group whose usage errors exit 1; exit 2 is reserved for violations."""

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(1)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


class AngleType(click.ParamType):
    """Radians as a float or a pi expression such as pi/36."""

    name = "angle"

    def convert(self, value, param, ctx):
        if isinstance(value, float):
            return value
        try:
            return parse_angle(value)
        except InvalidInputError as e:
            self.fail(str(e), param, ctx)


class RangeType(click.ParamType):
    """START:STOP[:STEP] in radians."""

    name = "range"

    def convert(self, value, param, ctx):
        if isinstance(value, dict):
            return value
        parts = str(value).split(":")
        if len(parts) not in (2, 3):
            self.fail(f"{value!r} is not START:STOP[:STEP]", param, ctx)
        try:
            angles = [parse_angle(part) for part in parts]
        except InvalidInputError as e:
            self.fail(str(e), param, ctx)
        spec: Dict[str, Any] = {"start": angles[0], "stop": angles[1]}
        if len(angles) == 3:
            spec["step"] = angles[2]
        return spec


ANGLE = AngleType()
RANGE = RangeType()
SIGN = click.Choice(["+", "-"])
FORMAT = click.Choice(["text", "json"], case_sensitive=False)


def _fail(e: Exception) -> None:
    logger.error("%s: %s", type(e).__name__, e)
    click.echo(f"❌ Error: {e}", err=True)
    sys.exit(1)


def _renderer():
    from .report import ReportRenderer

    return ReportRenderer()


def _parse_matrix(text: str) -> GeneralMatrix:
    try:
        pairs = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"--matrix is not valid JSON: {e}") from e
    return GeneralMatrix.from_pairs(pairs)


def _state(beta: float, alpha: float, sign: str) -> DensityMatrix:
    from .qstate import density_from_ket, density_xz, make_ket

    if alpha == 0.0:
        return density_xz(beta, Sign(sign))
    return density_from_ket(make_ket(Axis(alpha=alpha, beta=beta), Sign(sign)))


@click.group(cls=ExitCodeGroup)
@click.version_option(version=__version__, prog_name="entropic-bell")
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
@click.option(
    "--log-dir",
    type=click.Path(file_okay=False, path_type=Path),
    help="Write a dated log file into this directory.",
)
@click.pass_context
def main(ctx, verbose: bool, log_dir: Optional[Path]):
    """
    Entropic Bell inequalities for spin measurements

    Build spin-measurement density matrices, compute their entropies through
    the matrix logarithm, and map where Bell-type inequalities hold or fail
    across measurement-angle space.
    """
    ctx.ensure_object(dict)
    setup_logger(log_dir=log_dir, verbose=verbose)


@main.command()
@click.option("--beta-a", type=ANGLE, default=0.0, help="Polar rotation beta (radians).")
@click.option("--alpha", type=ANGLE, default=0.0, help="Phase rotation alpha (radians).")
@click.option("--sign-a", type=SIGN, default="+", help="Measurement outcome.")
@click.option("--literal", is_flag=True, help="Print the general-axis matrix as printed (v v^T).")
@click.option("--beam", is_flag=True, help="Print the 50-50 aligned/antialigned beam of one device.")
@click.option("--format", "output_format", type=FORMAT, default="text")
def density(beta_a: float, alpha: float, sign_a: str, literal: bool, beam: bool, output_format: str):
    """
    Print a single-measurement density matrix.

    Examples:
        entropic-bell density --beta-a pi/2
        entropic-bell density --beta-a pi/3 --alpha pi/4 --literal
    """
    from .qstate import device_beam_density, literal_density, matches_sx
    from .report import matrix_payload, to_json

    try:
        axis = Axis(alpha=alpha, beta=beta_a)
        note = None
        sign: Optional[str] = sign_a
        if beam:
            title = "Device beam: half aligned, half antialigned"
            matrix: GeneralMatrix = device_beam_density(axis)
            sign = None
        elif literal:
            title = "General-axis matrix (as printed)"
            matrix = literal_density(axis, Sign(sign_a))
            note = "unconjugated outer product; singular, and not Hermitian unless alpha is 0 or pi"
        else:
            title = "Density matrix"
            matrix = _state(axis.beta, axis.alpha, sign_a)

        eigenvalues = matrix.eigenvalues if isinstance(matrix, DensityMatrix) else None
        if isinstance(matrix, DensityMatrix) and matches_sx(matrix, Sign(sign_a)):
            note = f"equals the S_x ({sign_a}) eigenprojector"

        if output_format == "json":
            payload = {
                "alpha": axis.alpha,
                "beta": axis.beta,
                "sign": sign,
                "literal": literal,
                "beam": beam,
                "matrix": matrix_payload(matrix),
                "eigenvalues": list(eigenvalues) if eigenvalues else None,
            }
            click.echo(to_json(payload))
            return

        click.echo(
            _renderer().render(
                "density",
                title=title,
                alpha=axis.alpha,
                beta=axis.beta,
                sign=sign,
                matrix=matrix,
                eigenvalues=eigenvalues,
                note=note,
            ),
            nl=False,
        )
    except EntropicBellError as e:
        _fail(e)


@main.command()
@click.option("--beta-a", type=ANGLE, required=True, help="First measurement angle.")
@click.option("--beta-b", type=ANGLE, required=True, help="Second measurement angle.")
@click.option("--alpha", type=ANGLE, default=0.0, help="Common phase rotation alpha.")
@click.option("--sign-a", type=SIGN, default="+")
@click.option("--sign-b", type=SIGN, default="+")
@click.option("--format", "output_format", type=FORMAT, default="text")
def mix(beta_a: float, beta_b: float, alpha: float, sign_a: str, sign_b: str, output_format: str):
    """
    Print the incoherent 50-50 mixture of two measurements.

    Examples:
        entropic-bell mix --beta-a 0 --beta-b pi/2
    """
    from .matlog import is_invertible
    from .qstate import mix_pair
    from .report import matrix_payload, to_json

    try:
        rho_a = _state(beta_a, alpha, sign_a)
        rho_b = _state(beta_b, alpha, sign_b)
        mixture = mix_pair(rho_a, rho_b)

        if output_format == "json":
            payload = {
                "beta_a": beta_a,
                "beta_b": beta_b,
                "alpha": alpha,
                "sign_a": sign_a,
                "sign_b": sign_b,
                "rho_a": matrix_payload(rho_a),
                "rho_b": matrix_payload(rho_b),
                "mixture": matrix_payload(mixture),
                "eigenvalues": list(mixture.eigenvalues),
                "invertible": is_invertible(mixture),
            }
            click.echo(to_json(payload))
            return

        click.echo(
            _renderer().render(
                "mix",
                beta_a=beta_a,
                beta_b=beta_b,
                sign_a=sign_a,
                sign_b=sign_b,
                rho_a=rho_a,
                rho_b=rho_b,
                mixture=mixture,
                eigenvalues=mixture.eigenvalues,
                invertible=is_invertible(mixture),
            ),
            nl=False,
        )
    except EntropicBellError as e:
        _fail(e)


@main.command()
@click.option("--matrix", "matrix_json", help="2x2 matrix as JSON [re, im] pairs.")
@click.option("--beta-a", type=ANGLE, help="Measurement angle of the state.")
@click.option("--beta-b", type=ANGLE, help="Second angle: use the 50-50 mixture.")
@click.option("--alpha", type=ANGLE, default=0.0)
@click.option("--sign-a", type=SIGN, default="+")
@click.option("--sign-b", type=SIGN, default="+")
@click.option(
    "--route",
    type=click.Choice(["eigen", "trace", "both"], case_sensitive=False),
    default="both",
    help="Eigenvalue route, trace route through logm, or both.",
)
@click.option("--tol", type=float, default=None, help="Invertibility tolerance for the trace route.")
@click.option("--format", "output_format", type=FORMAT, default="text")
def entropy(
    matrix_json: Optional[str],
    beta_a: Optional[float],
    beta_b: Optional[float],
    alpha: float,
    sign_a: str,
    sign_b: str,
    route: str,
    tol: Optional[float],
    output_format: str,
):
    """
    Von Neumann entropy sigma and thermodynamic entropy S = k sigma.

    The trace route needs an invertible matrix; when it fails the command
    still prints the eigenvalue result and exits 1.

    Examples:
        entropic-bell entropy --beta-a 0 --beta-b pi/2
        entropic-bell entropy --matrix '[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]'
    """
    from . import entropy as entropy_mod
    from .qstate import mix_pair
    from .report import matrix_payload, to_json
    from .tolerances import INVERTIBILITY_TOL

    if (matrix_json is None) == (beta_a is None):
        click.echo("❌ Error: give exactly one of --matrix or --beta-a", err=True)
        sys.exit(1)

    try:
        if matrix_json is not None:
            rho = DensityMatrix(_parse_matrix(matrix_json).entries)
        else:
            rho = _state(beta_a, alpha, sign_a)
            if beta_b is not None:
                rho = mix_pair(rho, _state(beta_b, alpha, sign_b))

        report = entropy_mod.report(rho) if route in ("eigen", "both") else None
        sigma_trace = None
        trace_error = None
        if route in ("trace", "both"):
            try:
                sigma_trace = entropy_mod.von_neumann_tr(rho, tol if tol is not None else INVERTIBILITY_TOL)
            except EntropicBellError as e:
                trace_error = e

        if output_format == "json":
            payload = {
                "matrix": matrix_payload(rho),
                "route": route,
                "basis_eigenvalues": list(report.basis_eigenvalues) if report else None,
                "sigma": report.sigma if report else None,
                "s_thermo": report.s_thermo if report else None,
                "sigma_trace": sigma_trace,
                "diagonal_shannon": entropy_mod.diagonal_shannon(rho),
                "coherence_gap": entropy_mod.coherence_gap(rho),
                "trace_error": str(trace_error) if trace_error else None,
            }
            click.echo(to_json(payload))
        else:
            click.echo(
                _renderer().render(
                    "entropy",
                    matrix=rho,
                    report=report,
                    sigma_trace=sigma_trace,
                    diagonal_shannon=entropy_mod.diagonal_shannon(rho),
                    coherence_gap=entropy_mod.coherence_gap(rho),
                    trace_error=str(trace_error) if trace_error else None,
                ),
                nl=False,
            )

        if trace_error is not None:
            _fail(trace_error)
    except EntropicBellError as e:
        _fail(e)


@main.command()
@click.option("--matrix", "matrix_json", help="2x2 matrix as JSON [re, im] pairs.")
@click.option("--beta-a", type=ANGLE, help="Measurement angle of the state.")
@click.option("--beta-b", type=ANGLE, help="Second angle: take the log of the 50-50 mixture.")
@click.option("--alpha", type=ANGLE, default=0.0)
@click.option("--sign-a", type=SIGN, default="+")
@click.option("--sign-b", type=SIGN, default="+")
@click.option("--literal", is_flag=True, help="Use the general-axis matrix as printed.")
@click.option("--tol", type=float, default=None, help="Invertibility tolerance on |det|.")
@click.option("--format", "output_format", type=FORMAT, default="text")
def logm(
    matrix_json: Optional[str],
    beta_a: Optional[float],
    beta_b: Optional[float],
    alpha: float,
    sign_a: str,
    sign_b: str,
    literal: bool,
    tol: Optional[float],
    output_format: str,
):
    """
    Matrix logarithm with method (eigen/jordan) and complexity report.

    Singular input exits 1: a logarithm exists only for invertible matrices.

    Examples:
        entropic-bell logm --matrix '[[[1,0],[1,0]],[[0,0],[1,0]]]'
        entropic-bell logm --beta-a 0 --beta-b pi/2
    """
    from .matlog import log_status, logm as matrix_log
    from .qstate import literal_density, mix_pair
    from .report import matrix_payload, to_json
    from .tolerances import INVERTIBILITY_TOL

    if (matrix_json is None) == (beta_a is None):
        click.echo("❌ Error: give exactly one of --matrix or --beta-a", err=True)
        sys.exit(1)

    try:
        if matrix_json is not None:
            matrix = _parse_matrix(matrix_json)
        elif literal:
            matrix = literal_density(Axis(alpha=alpha, beta=beta_a), Sign(sign_a))
        else:
            matrix = _state(beta_a, alpha, sign_a)
            if beta_b is not None:
                matrix = mix_pair(matrix, _state(beta_b, alpha, sign_b))

        tol = tol if tol is not None else INVERTIBILITY_TOL
        result = matrix_log(matrix, tol)

        if output_format == "json":
            payload = {
                "matrix": matrix_payload(matrix),
                "method": result.method.value,
                "is_complex": result.is_complex,
                "status": log_status(matrix, tol).value,
                "log": result.matrix.to_pairs(),
            }
            click.echo(to_json(payload))
            return

        click.echo(_renderer().render("logm", matrix=matrix, result=result), nl=False)
    except EntropicBellError as e:
        _fail(e)


@main.command()
@click.argument("kind", type=click.Choice(sorted(CHECK_KINDS), case_sensitive=False))
@click.option("--beta-a", type=ANGLE, default=0.0, help="Angle a (theta_ab for cerf-adami).")
@click.option("--beta-b", type=ANGLE, default=0.0, help="Angle b (theta_bc for cerf-adami).")
@click.option("--beta-c", type=ANGLE, default=0.0, help="Angle c (theta_ac for cerf-adami).")
@click.option("--sign-a", type=SIGN, default="+")
@click.option("--sign-b", type=SIGN, default="+")
@click.option("--sign-c", type=SIGN, default="+")
@click.option("--mode", type=click.Choice(["entrywise", "loewner"]), default="entrywise")
@click.option("--units", type=click.Choice(["nats", "bits"]), default="nats")
@click.option("--alpha", type=ANGLE, default=0.0, help="Phase rotation for the matrix kind.")
@click.option("--coplanar", is_flag=True, help="cerf-adami: derive theta_ac = theta_ab + theta_bc.")
@click.option("--cross-check", is_flag=True, help="entropic: also evaluate the trace route.")
@click.option("--format", "output_format", type=FORMAT, default="text")
def check(
    kind: str,
    beta_a: float,
    beta_b: float,
    beta_c: float,
    sign_a: str,
    sign_b: str,
    sign_c: str,
    mode: str,
    units: str,
    alpha: float,
    coplanar: bool,
    cross_check: bool,
    output_format: str,
):
    """
    Single-point inequality verdict. Exits 2 when the inequality is violated.

    Examples:
        entropic-bell check wigner --beta-a 0 --beta-b pi/3 --beta-c 2*pi/3
        entropic-bell check cerf-adami --beta-a pi/12 --beta-b pi/12 --coplanar
    """
    from .inequality import check_cerf_adami, check_entropy, check_matrix, check_wigner_prob

    kind = CHECK_KINDS[kind.lower()]
    try:
        if alpha != 0.0 and kind != "matrix":
            raise InvalidInputError(f"--alpha applies to the matrix kind only, not {kind}")
        if coplanar and kind != "cerf_adami":
            raise InvalidInputError(f"--coplanar applies to the cerf-adami kind only, not {kind}")

        if kind == "wigner_prob":
            verdict = check_wigner_prob(beta_a, beta_b, beta_c)
        elif kind == "matrix":
            verdict = check_matrix(beta_a, beta_b, beta_c, sign_a, sign_b, sign_c, mode=mode, alpha=alpha)
        elif kind == "entropic":
            verdict = check_entropy(beta_a, beta_b, beta_c, sign_a, sign_b, sign_c, cross_check=cross_check)
        else:
            theta_ac = beta_a + beta_b if coplanar else beta_c
            verdict = check_cerf_adami(beta_a, beta_b, theta_ac, units=units)

        if output_format == "json":
            click.echo(verdict.model_dump_json(indent=2))
        else:
            click.echo(_renderer().render("verdict", verdict=verdict), nl=False)
    except EntropicBellError as e:
        _fail(e)

    if not verdict.holds:
        sys.exit(EXIT_VIOLATION)


@main.command()
@click.argument("kind", type=click.Choice(sorted(CHECK_KINDS), case_sensitive=False), required=False)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="YAML scan configuration; flags given here override it.",
)
@click.option("--range-a", type=RANGE, help="START:STOP[:STEP] for angle a.")
@click.option("--range-b", type=RANGE, help="START:STOP[:STEP] for angle b.")
@click.option("--range-c", type=RANGE, help="START:STOP[:STEP] for angle c.")
@click.option("--beta-a", type=ANGLE, help="Hold angle a fixed.")
@click.option("--beta-b", type=ANGLE, help="Hold angle b fixed.")
@click.option("--beta-c", type=ANGLE, help="Hold angle c fixed.")
@click.option("--closed", is_flag=True, help="Include STOP in ranges given here.")
@click.option("--step", type=ANGLE, help="Default step for ranges without one (default pi/36).")
@click.option("--sign-a", type=SIGN)
@click.option("--sign-b", type=SIGN)
@click.option("--sign-c", type=SIGN)
@click.option("--mode", type=click.Choice(["entrywise", "loewner"]))
@click.option("--units", type=click.Choice(["nats", "bits"]))
@click.option("--alpha", type=ANGLE)
@click.option("--coplanar", is_flag=True, help="cerf-adami: sweep a, b and set c = a + b.")
@click.option("--cross-check", is_flag=True, help="entropic: record the trace-route margin.")
@click.option("--workers", type=click.IntRange(min=1), help="Evaluate in a process pool.")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), help="Write here instead of stdout.")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]))
def scan(
    kind: Optional[str],
    config_path: Optional[Path],
    range_a: Optional[Dict[str, Any]],
    range_b: Optional[Dict[str, Any]],
    range_c: Optional[Dict[str, Any]],
    beta_a: Optional[float],
    beta_b: Optional[float],
    beta_c: Optional[float],
    closed: bool,
    step: Optional[float],
    sign_a: Optional[str],
    sign_b: Optional[str],
    sign_c: Optional[str],
    mode: Optional[str],
    units: Optional[str],
    alpha: Optional[float],
    coplanar: bool,
    cross_check: bool,
    workers: Optional[int],
    output: Optional[Path],
    output_format: Optional[str],
):
    """
    Sweep measurement angles over a grid and emit one record per point.

    Records go to stdout (or --output) as CSV or JSON in grid order.
    Exits 2 when any point violates the inequality.

    Examples:
        entropic-bell scan matrix --range-a 0:pi --closed
        entropic-bell scan cerf-adami --coplanar --format json --output map.json
        entropic-bell scan --config sweep.yaml --workers 4
    """
    from .scan import build_config, emit, load_config_file, merge_config, run_scan

    try:
        base = load_config_file(config_path) if config_path else {}

        ranges: Dict[str, Dict[str, Any]] = {}
        for key, spec in (("a", range_a), ("b", range_b), ("c", range_c)):
            if spec is not None:
                ranges[key] = dict(spec, closed=closed)
        for key, fixed in (("a", beta_a), ("b", beta_b), ("c", beta_c)):
            if fixed is not None:
                ranges[key] = {"start": fixed, "stop": fixed, "closed": True}

        signs = None
        if any(s is not None for s in (sign_a, sign_b, sign_c)):
            file_signs = base.get("signs", "+++")
            if isinstance(file_signs, str):
                file_signs = file_signs.replace(",", "").replace(" ", "")
            file_signs = list(file_signs)
            if len(file_signs) != 3:
                raise ConfigError(f"signs must name three outcomes, got {file_signs!r}")
            signs = [
                given if given is not None else file_signs[n]
                for n, given in enumerate((sign_a, sign_b, sign_c))
            ]

        overrides = {
            "kind": CHECK_KINDS[kind.lower()] if kind else None,
            "ranges": ranges or None,
            "step": step,
            "signs": signs,
            "mode": mode,
            "units": units,
            "alpha": alpha,
            # unset flags stay None so file values survive the merge
            "coplanar": True if coplanar else None,
            "cross_check": True if cross_check else None,
            "workers": workers,
            "output_format": output_format,
        }
        config = build_config(merge_config(base, overrides))
        run = run_scan(config)

        if output is None:
            emit(run, lambda: run.summary, config.output_format, sys.stdout, config=config)
        else:
            try:
                sink = open(output, "w", encoding="utf-8", newline="")
            except OSError as e:
                raise EmitError(f"Cannot open {output}: {e}") from e
            with sink:
                emit(run, lambda: run.summary, config.output_format, sink, config=config)

        summary = run.summary
        if output is not None:
            click.echo(f"✅ Wrote {summary.total_points} records to {output}")
            click.echo(f"   Violations: {summary.violations}")
            click.echo(f"   Not comparable: {summary.not_comparable}")
            if summary.worst_violation is not None:
                click.echo(f"   Worst margin: {summary.worst_violation.margin:.17g}")
    except EntropicBellError as e:
        _fail(e)

    if summary.violations > 0:
        sys.exit(EXIT_VIOLATION)
