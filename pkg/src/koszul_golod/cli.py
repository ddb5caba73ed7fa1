"""
Command-line interface for the Koszul/Golod engine.

  koszul-golod analyze  <file>
  koszul-golod witness  <file> [--max-codim d] [--seed s] [--budget b] [--quadric f ...]
  koszul-golod classify <file>
  koszul-golod corpus   [--name n]

Global flags --field, --trunc-hom, --trunc-int, --json <out> and -v come
before the command. The exit code is nonzero only for I/O or parse failures;
every other outcome, inconclusive ones included, is a report.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click

from . import __version__
from .models.enums import ResponseFormat
from .models.inputs import AnalyzeInput, Bounds, ClassifyInput, CorpusInput, WitnessInput
from .tools.analysis import koszul_golod_analyze
from .tools.classification import koszul_golod_classify, koszul_golod_corpus
from .tools.witness import koszul_golod_witness

# Error kinds that mean the input could not be read.
FATAL_ERRORS = (
    "Error: File not found",
    "Error: File not readable",
    "Error: ParseError",
    "Error: FieldError",
    "Error: PresentationError",
    "Error: CorpusError",
)


def _bounds_kwargs(obj: Dict[str, Any]) -> Dict[str, Any]:
    hom, internal = obj.get("trunc_hom"), obj.get("trunc_int")
    if hom is None and internal is None:
        return {}
    values = {k: v for k, v in (("hom", hom), ("internal", internal)) if v is not None}
    return {"bounds": Bounds(**values)}


def _run(ctx: click.Context, tool: Callable[[Any], str], model: Any, **fields: Any) -> None:
    obj = ctx.obj
    json_out: Optional[str] = obj.get("json_out")
    fmt = ResponseFormat.JSON if json_out else ResponseFormat.MARKDOWN
    try:
        params = model(response_format=fmt, **fields, **_bounds_kwargs(obj))
    except ValueError as e:
        click.echo(f"❌ Invalid arguments: {e}", err=True)
        sys.exit(2)

    output = tool(params)
    if output.startswith("Error:"):
        click.echo(output, err=True)
        if output.startswith(FATAL_ERRORS):
            sys.exit(1)
        return

    if json_out:
        try:
            Path(json_out).write_text(output + "\n", encoding="utf-8")
        except OSError as e:
            click.echo(f"❌ Cannot write {json_out}: {e}", err=True)
            sys.exit(1)
        click.echo(f"✅ Report written to {json_out}")
    else:
        click.echo(output)


@click.group()
@click.version_option(__version__, prog_name="koszul-golod")
@click.option("--field", "field_", default=None, help="Override the file's field: QQ, GF(p), GF(p)^k.")
@click.option("--trunc-hom", type=int, default=None, help="Homological bound N.")
@click.option("--trunc-int", type=int, default=None, help="Internal bound J.")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging.")
@click.pass_context
def cli(ctx, field_, trunc_hom, trunc_int, json_out, verbose):
    """Koszul and Golod properties of quadratic algebras with dim R_2 <= 3."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj.update(field=field_, trunc_hom=trunc_hom, trunc_int=trunc_int, json_out=json_out)


@cli.command()
@click.argument("path", type=click.Path())
@click.option("--no-golod", is_flag=True, help="Skip the Golod-ring test.")
@click.option("--power", "powers", type=int, multiple=True, help="Check ν^R(m^n) for this n (repeatable).")
@click.pass_context
def analyze(ctx, path, no_golod, powers):
    """Hilbert series, Betti table and Koszul verdict."""
    _run(
        ctx,
        koszul_golod_analyze,
        AnalyzeInput,
        path=path,
        field=ctx.obj["field"],
        golod=not no_golod,
        powers=list(powers),
    )


@cli.command()
@click.argument("path", type=click.Path())
@click.option("--max-codim", type=int, default=3, show_default=True, help="Largest witness codimension d.")
@click.option("--seed", type=int, default=None, help="Seed of the random candidates.")
@click.option("--budget", type=int, default=None, help="Candidates verified before giving up.")
@click.option("--quadric", "quadrics", multiple=True, help="Verify these quadrics instead of searching.")
@click.pass_context
def witness(ctx, path, max_codim, seed, budget, quadrics):
    """Find or verify a Golod witness P = Q/(f) -> R."""
    fields: Dict[str, Any] = {"path": path, "field": ctx.obj["field"], "max_codim": max_codim}
    if seed is not None:
        fields["seed"] = seed
    if budget is not None:
        fields["budget"] = budget
    if quadrics:
        fields["quadrics"] = list(quadrics)
    _run(ctx, koszul_golod_witness, WitnessInput, **fields)


@cli.command()
@click.argument("path", type=click.Path())
@click.option("--seed", type=int, default=None, help="Seed of every random step.")
@click.option("--budget", type=int, default=None, help="Witness candidates verified.")
@click.pass_context
def classify(ctx, path, seed, budget):
    """Run the full classification pipeline."""
    fields: Dict[str, Any] = {"path": path, "field": ctx.obj["field"]}
    if seed is not None:
        fields["seed"] = seed
    if budget is not None:
        fields["budget"] = budget
    _run(ctx, koszul_golod_classify, ClassifyInput, **fields)


@cli.command()
@click.option("--name", default=None, help="Run only this entry.")
@click.option("--path", "corpus_path", type=click.Path(), default=None, help="Corpus JSON file.")
@click.pass_context
def corpus(ctx, name, corpus_path):
    """Classify the shipped corpus and compare with the stored expectations."""
    _run(ctx, koszul_golod_corpus, CorpusInput, name=name, path=corpus_path)


if __name__ == "__main__":
    cli()
