"""Command-line interface.

Exit codes: 0 verified, 1 mathematical verification failure, 2 input error,
3 budget exhausted.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass

import click

from .errors import QuatpolyError
from .exprio import (
    ideal_from_json,
    parse_point,
    parse_poly,
    poly_from_json,
    print_quaternion,
    report_to_json,
)
from .fuzzing import FUZZ_SUITES
from .ideals import orbit_closure
from .scalarmode import DEFAULT_EPSILON, set_epsilon
from .witness import nullstellensatz_check

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    mode: str = "exact"
    eps: float = DEFAULT_EPSILON
    seed: int = 0
    trials: int = 0
    orbit_depth: int = 6
    orbit_max: int = 4096
    out: str = ""

    @property
    def exact(self) -> bool:
        return self.mode == "exact"


def _mode_options(fn):
    fn = click.option(
        "--mode",
        type=click.Choice(["exact", "float"]),
        default="exact",
        show_default=True,
        help="Scalar mode for parsing inputs.",
    )(fn)
    fn = click.option(
        "--eps",
        type=float,
        default=DEFAULT_EPSILON,
        show_default=True,
        help="Relative tolerance for float-mode equality.",
    )(fn)
    return fn


def _fail_input(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


@click.group()
def main():
    """Central polynomials over the quaternions: evaluation, lemma fuzzing,
    orbit membership, and Nullstellensatz certificates."""


@main.command("eval")
@click.argument("poly_text")
@click.option("--point", "point_text", required=True, help='Point, e.g. "[i,j]".')
@_mode_options
def cmd_eval(poly_text, point_text, mode, eps):
    """Evaluate POLY_TEXT at --point (arity taken from the point)."""
    set_epsilon(eps)
    exact = mode == "exact"
    try:
        point = parse_point(point_text, exact)
        f = parse_poly(poly_text, len(point), exact)
        if f.max_variable_index() != len(point):
            raise QuatpolyError(
                f"polynomial arity {f.max_variable_index()} != point length {len(point)}"
            )
        value = f.evaluate(point)
    except QuatpolyError as exc:
        _fail_input(str(exc))
    click.echo(print_quaternion(value))


@main.command("fuzz")
@click.argument("lemma", type=click.Choice(sorted(FUZZ_SUITES)))
@click.option("--trials", type=int, default=None, help="Trial count (per-suite default).")
@click.option("--seed", type=int, default=0, show_default=True)
@_mode_options
def cmd_fuzz(lemma, trials, seed, mode, eps):
    """Run a lemma property suite; any counterexample is an implementation bug."""
    set_epsilon(eps)
    suite = FUZZ_SUITES[lemma]
    outcome = suite(trials, seed) if trials else suite(seed=seed)
    click.echo(outcome.summary())
    sys.exit(EXIT_OK if outcome.ok else EXIT_FAILED)


@main.command("orbit")
@click.option("--point", "point_text", required=True, help='Point, e.g. "[i,j]".')
@click.option("--orbit-depth", type=int, default=6, show_default=True)
@click.option("--orbit-max", type=int, default=4096, show_default=True)
@_mode_options
def cmd_orbit(point_text, orbit_depth, orbit_max, mode, eps):
    """Closure of a point under suffix conjugations, with saturation flag."""
    set_epsilon(eps)
    try:
        point = parse_point(point_text, mode == "exact")
        if not point:
            raise QuatpolyError("empty point")
    except QuatpolyError as exc:
        _fail_input(str(exc))
    result = orbit_closure(point, orbit_depth, orbit_max)
    for p in result.points:
        click.echo("[" + ", ".join(print_quaternion(q) for q in p) + "]")
    click.echo(
        f"{len(result.points)} point(s), "
        + ("saturated" if result.saturated else "not saturated (budget)")
    )


@main.command("witness")
@click.argument("ideal_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--point", "point_text", required=True, help='Point, e.g. "[i,j,k]".')
@click.option(
    "--poly",
    "-f",
    "poly_source",
    required=True,
    help="Polynomial: inline expression, text file, or poly-JSON file.",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the full report JSON here.")
@click.option("--orbit-depth", type=int, default=6, show_default=True)
@click.option("--orbit-max", type=int, default=4096, show_default=True)
@_mode_options
def cmd_witness(ideal_file, point_text, poly_source, out, orbit_depth, orbit_max, mode, eps):
    """Nullstellensatz certificate pipeline for (ideal, point, polynomial)."""
    set_epsilon(eps)
    exact = mode == "exact"
    try:
        with open(ideal_file, "r", encoding="utf-8") as fh:
            ideal = ideal_from_json(json.load(fh))
        point = parse_point(point_text, exact)
        f = _load_poly(poly_source, ideal.arity, exact)
        if len(point) != ideal.arity:
            raise QuatpolyError(
                f"point length {len(point)} != ideal arity {ideal.arity}"
            )
    except (QuatpolyError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        _fail_input(str(exc))
    report = nullstellensatz_check(ideal, point, f, orbit_depth, orbit_max)
    payload = json.dumps(report_to_json(report), indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        click.echo(payload)
    direct = print_quaternion(report.direct_eval) if report.direct_eval else "?"
    click.echo(
        f"verdict: {report.verdict} [{report.mode}]  f(p) = {direct}", err=False
    )
    if report.verdict == "Proved" and report.agrees:
        sys.exit(EXIT_OK)
    if report.verdict == "Unknown":
        sys.exit(EXIT_BUDGET)
    sys.exit(EXIT_FAILED)


def _load_poly(source: str, arity: int, exact: bool):
    text = source
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        return poly_from_json(json.loads(text))
    return parse_poly(text, arity, exact)


if __name__ == "__main__":
    main()
