"""Command-line front end.

All numeric output is exact rational text; csv/json renderings are
byte-for-byte deterministic.  Exit codes: 0 success, 1 identity-suite
failure, 2 usage error.
"""
from __future__ import annotations

import io
import json
import sys
from fractions import Fraction
from typing import Optional

import click

from . import identities, sequences
from .integrals import Measure, convergence_report, exact_integral, level_integral
from .padic import valuation
from .polynomials import Polynomial

FORMAT_ENVVAR = "VOLKENBORN_FORMAT"
FORMATS = ("table", "csv", "json")

_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMATS),
    default="table",
    envvar=FORMAT_ENVVAR,
    show_default=True,
    help=f"Output format (env: {FORMAT_ENVVAR}).",
)


def _parse_rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"{what} must be an exact rational like 3, -1/2: got {text!r}")


def _parse_poly(text: str) -> Polynomial:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise click.UsageError("polynomial needs at least one coefficient")
    return Polynomial(_parse_rational(p, "coefficient") for p in parts)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _dump_csv(header: list[str], rows: list[list[str]]) -> str:
    import csv

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dump_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    for r in rows:
        out.append("  ".join(r[i].ljust(widths[i]) for i in range(len(header))).rstrip())
    return "\n".join(out) + "\n"


def _render(fmt: str, header: list[str], rows: list[list[str]], json_obj) -> str:
    if fmt == "json":
        return _dump_json(json_obj)
    if fmt == "csv":
        return _dump_csv(header, rows)
    return _dump_table(header, rows)


@click.group()
def cli() -> None:
    """Exact special-number sequences, p-adic integrals, and identity checks."""


# ---------------------------------------------------------------------------
# seq

_SINGLE_FAMILIES = {
    "bernoulli": lambda n, p: sequences.bernoulli(n),
    "euler": lambda n, p: sequences.euler(n),
    "daehee": lambda n, p: sequences.daehee(n),
    "daehee2": lambda n, p: sequences.daehee_hat(n),
    "changhee": lambda n, p: sequences.changhee(n),
    "changhee2": lambda n, p: sequences.changhee_hat(n),
    "fubini": lambda n, p: sequences.fubini(n),
    "cauchy": lambda n, p: sequences.cauchy(n),
    "harmonic": lambda n, p: sequences.harmonic(n),
    "apostol-bernoulli": lambda n, p: sequences.apostol_bernoulli(n, p),
    "apostol-euler": lambda n, p: sequences.apostol_euler(n, p),
    "frobenius-euler": lambda n, p: sequences.frobenius_euler(n, p),
}

_PARAMETRIC = {"apostol-bernoulli", "apostol-euler", "frobenius-euler"}

_TRIANGLE_FAMILIES = {
    "stirling1": sequences.stirling1,
    "stirling2": sequences.stirling2,
    "lah": sequences.lah,
    "eulerian": sequences.eulerian,
    "assoc-stirling1": sequences.assoc_stirling1,
    "assoc-stirling2": sequences.assoc_stirling2,
}

ALL_FAMILIES = sorted(_SINGLE_FAMILIES) + sorted(_TRIANGLE_FAMILIES) + ["array-poly"]


@cli.command("seq")
@click.argument("family", type=click.Choice(ALL_FAMILIES))
@click.option("--n", "n_max", type=int, required=True, help="Largest index to emit.")
@click.option("--param", default=None, help="Rational parameter (lambda or u) where required.")
@click.option("--v", "order_v", type=int, default=None, help="Order v for array-poly.")
@_format_option
def cmd_seq(family: str, n_max: int, param: Optional[str], order_v: Optional[int], fmt: str) -> None:
    """Emit values 0..N of a family (triangle rows for two-index families)."""
    if n_max < 0:
        raise click.UsageError("--n must be >= 0")

    if family in _SINGLE_FAMILIES:
        pval: Optional[Fraction] = None
        if family in _PARAMETRIC:
            if param is None:
                raise click.UsageError(f"family {family} requires --param")
            pval = _parse_rational(param, "--param")
        try:
            values = [_SINGLE_FAMILIES[family](n, pval) for n in range(n_max + 1)]
        except ValueError as exc:
            raise click.UsageError(str(exc))
        rows = [[str(n), str(v)] for n, v in enumerate(values)]
        obj = {
            "family": family,
            "param": None if pval is None else str(pval),
            "values": [{"n": n, "value": str(v)} for n, v in enumerate(values)],
        }
        click.echo(_render(fmt, ["n", "value"], rows, obj), nl=False)
        return

    if family in _TRIANGLE_FAMILIES:
        fn = _TRIANGLE_FAMILIES[family]
        rows = [
            [str(n), str(k), str(fn(n, k))] for n in range(n_max + 1) for k in range(n + 1)
        ]
        obj = {
            "family": family,
            "values": [{"n": int(r[0]), "k": int(r[1]), "value": r[2]} for r in rows],
        }
        click.echo(_render(fmt, ["n", "k", "value"], rows, obj), nl=False)
        return

    # array-poly: one polynomial per n at fixed order v and parameter lambda
    if order_v is None:
        raise click.UsageError("family array-poly requires --v")
    if order_v < 0:
        raise click.UsageError("--v must be >= 0")
    if param is None:
        raise click.UsageError("family array-poly requires --param")
    lam = _parse_rational(param, "--param")
    polys = [sequences.array_poly(n, order_v, lam) for n in range(n_max + 1)]
    rows = [[str(n), json.dumps(p.to_coeff_strings())] for n, p in enumerate(polys)]
    obj = {
        "family": family,
        "param": str(lam),
        "v": order_v,
        "values": [{"n": n, "coeffs": p.to_coeff_strings()} for n, p in enumerate(polys)],
    }
    click.echo(_render(fmt, ["n", "coeffs"], rows, obj), nl=False)


# ---------------------------------------------------------------------------
# integral

_MEASURES = {"b": "bosonic", "f": "fermionic", "q": "q"}


def _build_measure(measure: str, q: Optional[str]) -> Measure:
    kind = _MEASURES[measure]
    if kind == "q":
        if q is None:
            raise click.UsageError("the q measure requires --q")
        return Measure.q_weighted(_parse_rational(q, "--q"))
    if q is not None:
        raise click.UsageError("--q only applies to the q measure")
    return Measure(kind)


@cli.command("integral")
@click.argument("measure", type=click.Choice(sorted(_MEASURES)))
@click.option("--poly", required=True, help="Comma-separated rational coefficients, constant first.")
@click.option("--exact", "mode_exact", is_flag=True, help="Evaluate the symbolic integral.")
@click.option("--level", "mode_level", is_flag=True, help="Evaluate the level-N Riemann sum.")
@click.option("--p", "prime", type=int, default=None, help="Prime for level evaluation.")
@click.option("--N", "-N", "level_n", type=int, default=None, help="Level N.")
@click.option("--q", default=None, help="Rational q for the q measure.")
@_format_option
def cmd_integral(
    measure: str,
    poly: str,
    mode_exact: bool,
    mode_level: bool,
    prime: Optional[int],
    level_n: Optional[int],
    q: Optional[str],
    fmt: str,
) -> None:
    """Integrate a polynomial exactly or by a level-N sum."""
    if mode_exact == mode_level:
        raise click.UsageError("choose exactly one of --exact or --level")
    f = _parse_poly(poly)
    m = _build_measure(measure, q)

    if mode_exact:
        value = exact_integral(f, m)
        if value is None:
            raise click.UsageError("the q measure has no symbolic value here; use --level")
        obj = {"measure": m.kind, "mode": "exact", "value": str(value)}
        click.echo(_render(fmt, ["value"], [[str(value)]], obj), nl=False)
        return

    if prime is None or level_n is None:
        raise click.UsageError("--level requires --p and --N")
    try:
        value = level_integral(f, m, prime, level_n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    reference = exact_integral(f, m)
    if reference is None:
        err = None
    else:
        v = valuation(value - reference, prime)
        err = "inf" if v == float("inf") else str(v)
    rows = [[str(value), "" if err is None else err]]
    obj = {
        "measure": m.kind,
        "mode": "level",
        "p": prime,
        "N": level_n,
        "value": str(value),
        "err_valuation": err,
    }
    click.echo(_render(fmt, ["value", "err_valuation"], rows, obj), nl=False)


# ---------------------------------------------------------------------------
# converge

@cli.command("converge")
@click.option("--poly", required=True, help="Comma-separated rational coefficients, constant first.")
@click.option("--measure", type=click.Choice(sorted(_MEASURES)), default="b", show_default=True)
@click.option("--p", "prime", type=int, required=True)
@click.option("--N-max", "n_max", type=int, required=True)
@click.option("--q", default=None)
@_format_option
def cmd_converge(poly: str, measure: str, prime: int, n_max: int, q: Optional[str], fmt: str) -> None:
    """Tabulate level values N = 1..N_MAX with p-adic error valuations."""
    f = _parse_poly(poly)
    m = _build_measure(measure, q)
    try:
        report = convergence_report(f, m, prime, n_max)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "json":
        click.echo(_dump_json(report.to_json_obj()), nl=False)
    elif fmt == "csv":
        click.echo(report.to_csv(), nl=False)
    else:
        rows = []
        for row in report.rows:
            if row.err_valuation is None:
                err = ""
            elif row.err_valuation == float("inf"):
                err = "inf"
            else:
                err = str(row.err_valuation)
            rows.append([str(row.N), str(row.value), err])
        click.echo(_dump_table(["N", "value", "err_valuation"], rows), nl=False)


# ---------------------------------------------------------------------------
# verify

@cli.command("verify")
@click.option("--ids", default=None, help="Comma-separated record ids or group prefixes.")
@click.option("--n-max", type=int, default=None, help="Override the n-like grid caps.")
@click.option("--jobs", type=int, default=1, show_default=True, help="Concurrent record evaluation.")
@_format_option
def cmd_verify(ids: Optional[str], n_max: Optional[int], jobs: int, fmt: str) -> None:
    """Run the identity suite; exit 1 on any unadjudicated mismatch."""
    if jobs < 1:
        raise click.UsageError("--jobs must be >= 1")
    wanted = None
    if ids:
        wanted = [s.strip() for s in ids.split(",") if s.strip()]
    try:
        report = identities.verify_all(n_max=n_max, ids=wanted, jobs=jobs)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0]))
    if fmt == "json":
        click.echo(_dump_json(report.to_json_obj()), nl=False)
    elif fmt == "csv":
        rows = [
            [r.id, r.status, str(r.points), str(r.mismatch_count), "ok" if r.ok else "fail"]
            for r in report.results
        ]
        click.echo(_dump_csv(["id", "status", "points", "mismatches", "result"], rows), nl=False)
    else:
        click.echo(report.to_text_table(), nl=False)
    if not report.ok:
        sys.exit(1)


# ---------------------------------------------------------------------------
# table-dump

@cli.command("table-dump")
@click.argument("family", type=click.Choice(sorted(_TRIANGLE_FAMILIES)))
@click.option("--n-max", type=int, required=True)
@_format_option
def cmd_table_dump(family: str, n_max: int, fmt: str) -> None:
    """Dump a triangular table as rows n,k,value."""
    if n_max < 0:
        raise click.UsageError("--n-max must be >= 0")
    fn = _TRIANGLE_FAMILIES[family]
    rows = [[str(n), str(k), str(fn(n, k))] for n in range(n_max + 1) for k in range(n + 1)]
    if fmt == "json":
        obj = {
            "family": family,
            "rows": [{"n": int(r[0]), "k": int(r[1]), "value": r[2]} for r in rows],
        }
        click.echo(_dump_json(obj), nl=False)
    elif fmt == "table":
        click.echo(_dump_table(["n", "k", "value"], rows), nl=False)
    else:
        click.echo(_dump_csv(["n", "k", "value"], rows), nl=False)


def main() -> None:
    cli(prog_name="volkenborn")


if __name__ == "__main__":
    main()
