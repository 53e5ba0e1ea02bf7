import json
import logging
import sys
from typing import Optional

import click
import typer
from dotenv import load_dotenv
from rich.logging import RichHandler

from . import node_tracker
from .errors import (
    CertificateParseError,
    DomainError,
    IntervalColoringError,
    PreconditionError,
    UnsupportedConstructionError,
)
from .tools.common import EXIT_FAIL, EXIT_USAGE
from .tools.registry import dispatch_tool
from .ui.render import RENDERERS, err_console, show_error, show_node_totals

load_dotenv()

try:
    # recent typer releases raise from their own bundled copy of click
    from typer._click import exceptions as _typer_click
except ImportError:
    _typer_click = click.exceptions

USAGE_ERRORS = tuple({click.UsageError, _typer_click.UsageError})
ABORTS = tuple({click.exceptions.Abort, _typer_click.Abort})

EXIT_INTERRUPTED = 130

app = typer.Typer(help="Interval edge colorings of Cartesian products: build, verify, search and bound them.")

JSON_OPTION = typer.Option(False, "--json", help="Print the machine-readable record instead of tables.")
FAMILY_OPTION = typer.Option(..., "--family", "-f", help="Graph family, e.g. grid, cylinder, torus, hypercube.")
PARAMS_OPTION = typer.Option("", "--params", "-p", help="Comma-separated family parameters, e.g. 3,4.")


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log search and construction details.")):
    """Set up logging on stderr so stdout stays machine-readable."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _run(name: str, as_json: bool, **kwargs) -> None:
    try:
        record = dispatch_tool(name, **kwargs)
    except CertificateParseError as e:
        show_error(f"parse error: {e}")
        raise typer.Exit(EXIT_FAIL)
    except (DomainError, UnsupportedConstructionError, PreconditionError) as e:
        show_error(str(e))
        raise typer.Exit(EXIT_USAGE)
    except IntervalColoringError as e:
        show_error(str(e))
        raise typer.Exit(EXIT_FAIL)

    if as_json:
        typer.echo(json.dumps(record))
    else:
        RENDERERS[name](record)
    if record["exit_code"]:
        raise typer.Exit(record["exit_code"])


@app.command()
def gen(
    family: str = FAMILY_OPTION,
    params: str = PARAMS_OPTION,
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Write the edge list here instead of stdout."),
    as_json: bool = JSON_OPTION,
):
    """Emit a family instance as an edge list."""
    _run("gen", as_json, family=family, params=params, out=out)


@app.command()
def construct(
    family: str = FAMILY_OPTION,
    params: str = PARAMS_OPTION,
    mode: str = typer.Option("widest", "--mode", "-m", help="minimal or widest."),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Certificate path."),
    dot: Optional[str] = typer.Option(None, "--dot", help="Also write a DOT rendering here."),
    as_json: bool = JSON_OPTION,
):
    """Build a formula coloring, verify it and write its certificate."""
    _run("construct", as_json, family=family, params=params, mode=mode, out=out, dot=dot)


@app.command()
def verify(
    path: str = typer.Argument(..., help="Certificate file."),
    shortcut: bool = typer.Option(False, "--shortcut", help="Also run the connected-graph check."),
    as_json: bool = JSON_OPTION,
):
    """Re-verify a certificate; exit 0 iff the coloring is an interval coloring."""
    _run("verify", as_json, path=path, shortcut=shortcut)


@app.command()
def search(
    family: Optional[str] = typer.Option(None, "--family", "-f", help="Graph family."),
    params: str = PARAMS_OPTION,
    graph_file: Optional[str] = typer.Option(None, "--graph", "-g", help="Edge-list file instead of a family."),
    t: Optional[int] = typer.Option(None, "--t", "-t", help="Decide whether an interval t-coloring exists."),
    stat: Optional[str] = typer.Option(None, "--stat", help="Compute w or W."),
    profile: bool = typer.Option(False, "--profile", help="Decide every t in a range."),
    t_min: Optional[int] = typer.Option(None, "--t-min", help="Profile start."),
    t_max: Optional[int] = typer.Option(None, "--t-max", help="Profile end and scan ceiling."),
    workers: int = typer.Option(1, "--workers", "-w", help="Processes for --profile."),
    node_budget: Optional[int] = typer.Option(None, "--node-budget", help="Search nodes per t."),
    time_budget: Optional[float] = typer.Option(None, "--time-budget", help="Seconds per t."),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Certificate path (a directory for --profile)."),
    as_json: bool = JSON_OPTION,
):
    """Exact search; exit 0 found, 1 exhausted, 2 inconclusive."""
    _run(
        "search",
        as_json,
        family=family,
        params=params,
        graph_file=graph_file,
        t=t,
        stat=stat,
        profile=profile,
        t_min=t_min,
        t_max=t_max,
        workers=workers,
        node_budget=node_budget,
        time_budget=time_budget,
        out=out,
    )


@app.command()
def bounds(
    family: str = FAMILY_OPTION,
    params: str = PARAMS_OPTION,
    times: Optional[str] = typer.Option(None, "--times", help="Second factor family."),
    times_params: str = typer.Option("", "--times-params", help="Second factor parameters."),
    mode: Optional[str] = typer.Option(None, "--mode", "-m", help="Also report the t of this construction."),
    oracle: bool = typer.Option(False, "--oracle", help="Also compute w and W by search on small graphs."),
    as_json: bool = JSON_OPTION,
):
    """Known bounds and exact values for a family instance."""
    _run("bounds", as_json, family=family, params=params, times=times, times_params=times_params,
         mode=mode, oracle=oracle)


@app.command()
def matrix(
    suite: str = typer.Option("all", "--suite", "-s", help="grid, cylinder-widest, cylinder-minimal, torus-odd, torus-even, products or all."),
    out_dir: Optional[str] = typer.Option(None, "--out-dir", "-o", help="Write certificates and summary.json here."),
    workers: int = typer.Option(1, "--workers", "-w", help="Processes."),
    as_json: bool = JSON_OPTION,
):
    """Construct, verify and bound-check every instance of a suite."""
    _run("matrix", as_json, suite=suite, out_dir=out_dir, workers=workers)


@app.command("export-dot")
def export_dot(
    certificate: str = typer.Argument(..., help="Certificate file."),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Write the DOT text here instead of stdout."),
    as_json: bool = JSON_OPTION,
):
    """Render a certificate as Graphviz DOT with color-labeled edges."""
    _run("export_dot", as_json, certificate=certificate, out=out)


def run():
    """Console entry point: click's usage errors exit 64 instead of 2."""
    try:
        code = app(standalone_mode=False)
    except USAGE_ERRORS as e:
        e.show()
        code = EXIT_USAGE
    except (*ABORTS, KeyboardInterrupt):
        show_error("interrupted")
        code = EXIT_INTERRUPTED

    searches, nodes, seconds = node_tracker.get_totals()
    if searches > 0:
        show_node_totals(searches, nodes, seconds)
    sys.exit(code or 0)


if __name__ == "__main__":
    run()
