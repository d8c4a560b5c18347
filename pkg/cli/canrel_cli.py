#!/usr/bin/env python3
"""
CANREL CLI Tool
Command-line interface for checks and constructions on finite groupoids,
double groupoids, hopfoids and linear canonical relations.

Exit codes: 0 pass, 1 check failure, 2 usage, I/O or structure error.
"""

import sys
import os
from contextlib import contextmanager
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import click
from rich.console import Console
from rich.table import Table

from canrel import __version__

console = Console(stderr=True)

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

GROUPS = ("Z1", "Z2", "Z3", "Z4", "V4", "S3", "D4", "Q8")
EXAMPLE_KINDS = ("group", "pair", "trivial", "action", "dmain", "dinertia", "crossed", "product")


@contextmanager
def handle_errors():
    """Report engine and I/O errors on stderr and exit with code 2."""
    from canrel.core.errors import CanrelError

    try:
        yield
    except (CanrelError, OSError, ValueError) as e:
        console.print(f"[red]Error:[/red] {e}")
        sys.exit(EXIT_ERROR)


def emit(value, output: str = None) -> None:
    """Write the canonical document to --output or stdout."""
    from canrel.models import serialize

    data = serialize(value)
    if output:
        Path(output).write_bytes(data)
        console.print(f"[green]✓ Wrote {output}[/green]")
    else:
        click.echo(data, nl=False)


def finish(report) -> None:
    summary = report.summary()
    colour = "green" if report.passed else "red"
    console.print(
        f"[{colour}]{summary['passed']}/{summary['total']} checks passed[/{colour}]"
        + (f", {summary['failed']} failed" if summary["failed"] else "")
    )
    sys.exit(EXIT_PASS if report.passed else EXIT_FAIL)


def group_table(name: str):
    from canrel.grpd.groups import cyclic, dihedral, direct_product, quaternion, symmetric

    builders = {
        "Z1": lambda: cyclic(1),
        "Z2": lambda: cyclic(2),
        "Z3": lambda: cyclic(3),
        "Z4": lambda: cyclic(4),
        "V4": lambda: direct_product(cyclic(2), cyclic(2)),
        "S3": lambda: symmetric(3),
        "D4": lambda: dihedral(4),
        "Q8": quaternion,
    }
    return builders[name]()


def build_example(kind: str, group: str, size: int):
    """A fixture groupoid or double; pair and trivial use objects 1..size,
    the double families are built over the group."""
    from canrel.dbl.examples import build_examples, inclusion_crossed
    from canrel.grpd.standard import build_standard

    objects = list(range(1, size + 1))
    G = group_table(group)
    if kind in ("group", "pair", "trivial"):
        return build_standard(kind, G if kind == "group" else objects)
    if kind == "action":
        # G acting on itself by left translation; for Z2 this is the swap of two points
        act = {(k, p): G(k, p) for k in G for p in G}
        return build_standard("action", (G, list(G.elements), act))
    if kind in ("dmain", "dinertia"):
        return build_examples(kind, build_standard("group", G))
    if kind == "crossed":
        return build_examples(kind, inclusion_crossed(G))
    return build_examples("product", (G, G))


@click.group()
@click.version_option(version=__version__, prog_name="canrel")
@click.option("--log-level", default=None, help="Logging level (default: CANREL_LOG_LEVEL)")
def cli(log_level: str):
    """CANREL - finite canonical relations, groupoids and hopfoids"""
    from canrel.core.logging import setup_logging

    setup_logging(log_level)


@cli.command()
@click.option("--input", "-i", "input_path", required=True, help="Document to check")
@click.option("--kind", "-k", default=None, help="Expected document kind")
@click.option("--depth", "-d", type=int, default=None, help="Depth for simplicial documents")
@click.option("--output", "-o", default=None, help="Report path (default: stdout)")
def validate(input_path: str, kind: str, depth: int, output: str):
    """Run the validator for a document and emit a report."""
    from canrel.core import get_settings
    from canrel.models import parse
    from canrel.services import ValidationService

    with handle_errors():
        value = parse(input_path)
        report = ValidationService(get_settings()).validate(value, kind=kind, depth=depth)
        emit(report, output)
    finish(report)


@cli.command()
@click.option("--input", "-i", "input_path", required=True, help="Source document")
@click.option("--op", required=True, type=click.Choice([
    "core", "hopfoid", "induced", "inertia", "nerve", "example",
    "transpose", "dual", "reconstruct", "orbits",
]), help="Construction to apply")
@click.option("--depth", "-d", type=int, default=None, help="Simplicial depth (default: CANREL_DEFAULT_DEPTH)")
@click.option("--kind", "-k", default=None, help="Double kind for --op example (dmain | dinertia)")
@click.option("--output", "-o", default=None, help="Output path (default: stdout)")
def construct(input_path: str, op: str, depth: int, kind: str, output: str):
    """Build a derived structure and emit it as a document."""
    from canrel.core import get_settings
    from canrel.models import parse
    from canrel.services import ConstructionService

    with handle_errors():
        value = parse(input_path)
        result = ConstructionService(get_settings()).construct(value, op, depth=depth, kind=kind)
        emit(result, output)


@cli.command()
@click.option("--op", required=True, type=click.Choice([
    "compose", "reduce", "factor", "lift", "two-term", "dom-im", "induced-iso",
]), help="Linear operation")
@click.option("--input", "-i", "inputs", multiple=True, required=True, help="Matrix or chain document (repeatable)")
@click.option("--output", "-o", default=None, help="Output path (default: stdout)")
def linear(op: str, inputs, output: str):
    """Run an operation of the linear symplectic category."""
    from canrel.core import get_settings
    from canrel.models import parse
    from canrel.services import LinearService

    with handle_errors():
        values = [parse(path) for path in inputs]
        result = LinearService(get_settings()).run(op, values)
        emit(result, output)


@cli.command(name="enumerate")
@click.option("--max-arrows", type=int, default=None, help="Arrow bound (default: CANREL_MAX_ARROWS)")
@click.option("--max-squares", type=int, default=None, help="Square bound (default: CANREL_MAX_SQUARES)")
@click.option("--check", "-c", "checks", default=None, help="Comma separated checks (default: all but nerve)")
@click.option("--inject-bad", is_flag=True, help="Add a known-bad groupoid table")
@click.option("--output", "-o", default=None, help="Report path (default: stdout)")
def enumerate_structures(max_arrows: int, max_squares: int, checks: str, inject_bad: bool, output: str):
    """Check every small groupoid and double groupoid up to isomorphism."""
    from canrel.core import get_settings
    from canrel.services import EnumerationService

    names = [c for c in checks.split(",") if c.strip()] if checks else None
    with handle_errors():
        with console.status("[cyan]Enumerating...[/cyan]"):
            report = EnumerationService(get_settings()).run(max_arrows, max_squares, names, inject_bad)
        emit(report, output)
        for check in report.failures:
            console.print(f"[red]✗ {check.name}[/red] {check.witness}")
    finish(report)


@cli.command()
@click.option("--input", "-i", "input_path", required=True, help="Document to summarize")
def show(input_path: str):
    """Summarize a document as a table."""
    from canrel.models import kind_of, parse, to_payload

    with handle_errors():
        value = parse(input_path)
        payload = to_payload(value)

    table = Table(title=f"CANREL {kind_of(value)}")
    table.add_column("Field", style="cyan")
    table.add_column("Size", style="green")
    table.add_column("Value", style="yellow")
    for name, field in payload.items():
        if isinstance(field, (list, dict)):
            table.add_row(name, str(len(field)), "")
        else:
            table.add_row(name, "", str(field))
    Console().print(table)


@cli.command()
@click.option("--kind", "-k", required=True, type=click.Choice(EXAMPLE_KINDS), help="Fixture family")
@click.option("--group", "-g", default="Z2", type=click.Choice(GROUPS), help="Group for group-based families")
@click.option("--size", "-n", type=int, default=2, help="Objects for pair and trivial")
@click.option("--output", "-o", default=None, help="Output path (default: stdout)")
def example(kind: str, group: str, size: int, output: str):
    """Write a fixture document."""
    with handle_errors():
        emit(build_example(kind, group, size), output)


if __name__ == "__main__":
    cli()
