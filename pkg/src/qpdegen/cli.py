"""Command-line front end.

Every subcommand prints one table, as CSV (default) or as a JSON array of
objects. Reals are written with ``repr``, the shortest decimal that parses
back to the same double, so CSV and JSON outputs agree bit for bit.

Exit status: 0 on success, 2 for usage or domain errors, 3 when a root
cannot be found or a solver does not converge.

Usage::

    qpdegen spectrum --kind td --q 0.8660254 --n-max 8
    qpdegen td-solve --m 0 --k 4
    qpdegen table --m 2,3,4,10
    qpdegen curve --pair 0,2 --samples 3
    qpdegen intersect --pair 0,3 --exponent 5
    qpdegen bm --n 1 --r 1 --k 0
"""

from __future__ import annotations

import csv
import functools
import io
import json
import logging
import sys
from typing import Any, Callable, Iterable, Sequence

import click

from .bm import AngleFamily, degeneracy_angle
from .brackets import PhaseDeformation, RealDeformation, TDDeformation
from .errors import ConvergenceError, DomainError, NotFoundError
from .qp import CurveSpec, intersect_constraint, trace_curve
from .spectrum import energy_bm, spectrum_table
from .td import DegeneracyPair, solve_degeneracy, table_E0_Em

__all__ = ["cli", "SCHEMAS", "EXIT_DOMAIN", "EXIT_NUMERIC"]

log = logging.getLogger(__name__)

EXIT_DOMAIN = 2
EXIT_NUMERIC = 3
INTERSECT_ENERGY_TOL = 1e-10
BM_MAX_BRANCH = 10

SCHEMAS: dict[str, tuple[str, ...]] = {
    "spectrum": ("n", "energy"),
    "root": ("m", "k", "q", "residual", "iterations"),
    "curve": ("q", "p", "residual", "dpdq"),
    "bm": ("theta", "n", "r", "e_low", "e_high", "diff"),
}


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(rows: Iterable[Sequence[Any]], schema: str, fmt: str) -> str:
    columns = SCHEMAS[schema]
    rows = [tuple(r) for r in rows]
    if fmt == "json":
        return json.dumps([dict(zip(columns, r)) for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt(v) for v in r])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def common_options(func: Callable) -> Callable:
    """--format/--tol/--samples/--out shared by every subcommand."""

    @click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
                  show_default=True)
    @click.option("--tol", type=float, default=1e-12, show_default=True,
                  help="Residual tolerance for root solves.")
    @click.option("--samples", type=int, default=256, show_default=True,
                  help="Number of curve samples (curve only).")
    @click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                  help="Write to this file instead of standard output.")
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        tol = kwargs["tol"]
        if not tol > 0.0:
            _fail(EXIT_DOMAIN, f"--tol must be positive, got {tol}")
        try:
            return func(*args, **kwargs)
        except DomainError as exc:
            _fail(EXIT_DOMAIN, str(exc))
        except (NotFoundError, ConvergenceError) as exc:
            _fail(EXIT_NUMERIC, str(exc))

    return wrapper


def _int_list(ctx, param, value: str | None) -> list[int] | None:
    if value is None:
        return None
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _pair(ctx, param, value: str) -> tuple[int, int]:
    parts = _int_list(ctx, param, value)
    if parts is None or len(parts) != 2:
        raise click.BadParameter(f"expected LOW,HIGH, got {value!r}")
    return parts[0], parts[1]


@click.group()
@click.version_option(package_name="artifact")
def cli() -> None:
    """Spectra and accidental level degeneracies of deformed oscillators."""
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")


@cli.command()
@click.option("--kind", type=click.Choice(["bm", "td", "qp"]), required=True)
@click.option("--q", "q", type=float, default=None)
@click.option("--p", "p", type=float, default=None)
@click.option("--theta-num", type=int, default=None, help="theta = pi * NUM / DEN (bm).")
@click.option("--theta-den", type=int, default=None)
@click.option("--n-max", type=int, required=True)
@common_options
def spectrum(kind, q, p, theta_num, theta_den, n_max, fmt, tol, samples, out):
    """Energy levels E_0..E_{n-max}."""
    if n_max < 0:
        raise DomainError(f"--n-max must be >= 0, got {n_max}")
    if kind == "bm":
        if theta_num is None or theta_den is None:
            raise DomainError("bm spectrum needs --theta-num and --theta-den")
        d = PhaseDeformation.from_pi_fraction(theta_num, theta_den)
    elif kind == "td":
        if q is None:
            raise DomainError("td spectrum needs --q")
        d = TDDeformation(q)
    else:
        if q is None or p is None:
            raise DomainError("qp spectrum needs --q and --p")
        d = RealDeformation(q, p)
    rows = [(lvl.n, lvl.energy) for lvl in spectrum_table(n_max, d)]
    _emit(render(rows, "spectrum", fmt), out)


@cli.command("td-solve")
@click.option("--m", "m", type=int, required=True, help="Lower level.")
@click.option("--k", "k", type=int, required=True, help="Level gap.")
@common_options
def td_solve(m, k, fmt, tol, samples, out):
    """Tamm-Dancoff q with E_m = E_{m+k}."""
    r = solve_degeneracy(DegeneracyPair(m, k), tol)
    if r.count > 1:
        log.warning("%d sign changes in (0, 1); reporting the smallest root", r.count)
    _emit(render([(m, k, r.value, r.residual, r.iterations)], "root", fmt), out)


@cli.command()
@click.option("--m", "m_list", callback=_int_list, required=True,
              help="Comma-separated levels m >= 2.")
@common_options
def table(m_list, fmt, tol, samples, out):
    """Tamm-Dancoff q_m with E_0 = E_m."""
    rows = [(0, m, r.value, r.residual, r.iterations) for m, r in table_E0_Em(m_list, tol)]
    _emit(render(rows, "root", fmt), out)


@cli.command()
@click.option("--pair", callback=_pair, required=True, help="LOW,HIGH level pair.")
@common_options
def curve(pair, fmt, tol, samples, out):
    """Trace the degeneracy curve E_LOW = E_HIGH in the (q, p) square."""
    spec = CurveSpec(*pair)
    if not spec.proven:
        log.warning(
            "E_%d = E_%d is a general pair: curve computed numerically, "
            "monotonicity is not established",
            spec.m_low, spec.m_high,
        )
    rows = [(s.q, s.p, s.residual, s.dpdq) for s in trace_curve(spec, samples, tol)]
    _emit(render(rows, "curve", fmt), out)


@cli.command()
@click.option("--pair", callback=_pair, required=True, help="LOW,HIGH level pair.")
@click.option("--exponent", type=float, required=True, help="Constraint p = q**EXPONENT.")
@common_options
def intersect(pair, exponent, fmt, tol, samples, out):
    """Crossing of p = q**EXPONENT with the degeneracy curve."""
    spec = CurveSpec(*pair)
    r = intersect_constraint(spec, exponent, tol)
    gap = abs(r.meta["e_high"] - r.meta["e_low"])
    if gap > INTERSECT_ENERGY_TOL:
        raise ConvergenceError(
            f"energies at q = {r.value!r} differ by {gap!r} > {INTERSECT_ENERGY_TOL}"
        )
    row = (spec.m_low, spec.gap, r.value, r.residual, r.iterations)
    _emit(render([row], "root", fmt), out)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r", type=int, required=True, help="Level gap r >= 1.")
@click.option("--k", "k", type=int, default=0, show_default=True, help="Branch index.")
@common_options
def bm(n, r, k, fmt, tol, samples, out):
    """BM root-of-unity angle giving E_n = E_{n+r}."""
    if abs(k) > BM_MAX_BRANCH:
        raise DomainError(f"|k| must be <= {BM_MAX_BRANCH}, got {k}")
    fam = AngleFamily(n, r, k)
    d = degeneracy_angle(fam)
    e_low, e_high = energy_bm(n, d), energy_bm(n + r, d)
    _emit(render([(d.theta, n, r, e_low, e_high, e_high - e_low)], "bm", fmt), out)


def main() -> None:  # pragma: no cover
    cli()
