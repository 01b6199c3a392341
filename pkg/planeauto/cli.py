"""Main script for the planeauto package."""
from __future__ import annotations

import sys
from typing import Any, Optional, Sequence

import click

MAP_FILE = click.Path(exists=True, dir_okay=False)

RUN_OPTIONS = [
    click.option(
        "--out",
        type=click.Path(dir_okay=False),
        help="Write the JSON report (or the raster, for --format pgm/csv) to this file.",
    ),
    click.option(
        "--format",
        "output_format",
        type=click.Choice(["json", "pgm", "csv"]),
        help="Output format; pgm and csv apply to the raster command.",
    ),
    click.option("--seed", type=int, help="Seed for randomized corpora."),
    click.option("--max-iter", type=int, help="Iteration cap for escape-rate numerics."),
    click.option(
        "--escape-radius",
        type=float,
        help="Escape radius; defaults to the computed filtration radius.",
    ),
    click.option(
        "--settings-file",
        "-S",
        type=click.Path(dir_okay=False),
        help="Specifies which planeauto_settings.yaml file to use.",
    ),
    click.option("--debug", is_flag=True, help="Enable Debug Mode"),
]


def run_options(func):
    for option in reversed(RUN_OPTIONS):
        func = option(func)
    return func


def _execute(name: str, arguments: dict[str, Any], run: dict[str, Any]):
    from planeauto.main import run_command

    return run_command(name, arguments, **run)


@click.group()
def cli() -> None:
    """Polynomial automorphisms of the plane: classification, Green functions and conjugacy."""


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@run_options
def classify(input_path: str, **run):
    """Decide elliptic or loxodromic and report the dynamical degree."""
    return _execute("classify", {"input": input_path}, run)


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@run_options
def decompose(input_path: str, **run):
    """Write the map as a reduced word of affine and elementary factors."""
    return _execute("decompose", {"input": input_path}, run)


@cli.command("normal-form")
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@click.option("--monic", is_flag=True, help="Normalize leading coefficients to 1.")
@run_options
def normal_form(input_path: str, monic: bool, **run):
    """Conjugate a loxodromic map to a composition of generalized Hénon maps."""
    return _execute("normal-form", {"input": input_path, "monic": monic}, run)


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@run_options
def invert(input_path: str, **run):
    """Compute the exact inverse."""
    return _execute("invert", {"input": input_path}, run)


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@click.option("--point", required=True, help="x_re,x_im,y_re,y_im")
@click.option(
    "--mode", type=click.Choice(["gplus", "gminus", "gmax"]), default="gplus", show_default=True
)
@run_options
def green(input_path: str, point: str, mode: str, **run):
    """Evaluate a Green function at one point."""
    return _execute("green", {"input": input_path, "point": point, "mode": mode}, run)


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@click.option("--grid", default="64,64", show_default=True, help="nx,ny")
@click.option("--chart", help="ox,oy,ux,uy,vx,vy,r; defaults to the real plane of radius 2.")
@click.option(
    "--mode", type=click.Choice(["gplus", "gminus", "gmax"]), default="gmax", show_default=True
)
@run_options
def raster(input_path: str, grid: str, chart: Optional[str], mode: str, **run):
    """Sample a Green function on a 2D slice."""
    arguments = {"input": input_path, "grid": grid, "chart": chart, "mode": mode}
    return _execute("raster", arguments, run)


@cli.command()
@click.option("-i", "--input", "input_path", required=True, type=MAP_FILE, help="Map JSON file.")
@click.option("--max-period", type=click.IntRange(1, 6), default=1, show_default=True)
@run_options
def periodic(input_path: str, max_period: int, **run):
    """Find periodic orbits and their multipliers."""
    return _execute("periodic", {"input": input_path, "max_period": max_period}, run)


@cli.command()
@click.option("-f", "f_path", required=True, type=MAP_FILE, help="Map JSON file for f.")
@click.option("-g", "g_path", required=True, type=MAP_FILE, help="Map JSON file for g.")
@click.option("-D", "--degree-cap", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--max-period", type=click.IntRange(0, 6), default=1, show_default=True)
@click.option("--tol", type=float, help="Multiplier comparison tolerance.")
@run_options
def conjugate(f_path: str, g_path: str, degree_cap: int, max_period: int, tol, **run):
    """Search for a conjugator of bounded degree, or refute."""
    if tol is not None and not tol > 0:
        raise click.BadParameter("must be positive", param_hint="--tol")
    arguments = {
        "f": f_path,
        "g": g_path,
        "degree_cap": degree_cap,
        "max_period": max_period,
        "tol": tol,
    }
    return _execute("conjugate", arguments, run)


@cli.command()
@click.option("-f", "f_path", type=MAP_FILE, help="Map JSON file for f.")
@click.option("-g", "g_path", type=MAP_FILE, help="Map JSON file for g.")
@click.option("--df", type=int, help="Degree of f.")
@click.option("--dg", type=int, help="Degree of g.")
@run_options
def bound(f_path, g_path, df, dg, **run):
    """Print the exact completeness bound on conjugator degrees."""
    arguments = {"f": f_path, "g": g_path, "df": df, "dg": dg}
    return _execute("bound", arguments, run)


@cli.command()
@click.option("--m", "m", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--d", "d", type=int, default=2, show_default=True)
@click.option("--max-period", type=click.IntRange(0, 6), default=1, show_default=True)
@run_options
def example(m: int, d: int, max_period: int, **run):
    """Certify the conjugacy of (y, x + y^(m+1)) and (y, x + d·y^(m+1))."""
    return _execute("example", {"m": m, "d": d, "max_period": max_period}, run)


@cli.command("make-settings")
@click.argument("settings_file", type=click.Path(dir_okay=False), default="planeauto_settings.yaml")
def make_settings(settings_file: str):
    """Write the user-configurable defaults to a YAML settings file."""
    from planeauto.config import ConfigBuilder

    ConfigBuilder.make_settings(settings_file)
    click.echo(f"Settings written to {settings_file}", err=True)
    return 0


def dispatch(argv: Optional[Sequence[str]] = None):
    """Run the command line; returns (exit code, RunReport or None)."""
    from planeauto.main import RunReport

    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="planeauto",
            standalone_mode=False,
        )
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1, None
    except click.ClickException as e:
        e.show()
        return e.exit_code, None
    if isinstance(rv, RunReport):
        return rv.exit_code, rv
    return (rv if isinstance(rv, int) else 0), None


def main() -> None:
    sys.exit(dispatch()[0])


if __name__ == "__main__":
    main()
