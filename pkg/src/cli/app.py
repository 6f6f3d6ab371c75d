"""
Command line entry point using Typer.

    serre-weights gene --p 5 --f 7 --h 4865171564 --gamma 58923 --gamma-prime 77258
    serre-weights weights --gene "O,A,B,A,AB,O,A/B,A,AB,O,O,B,AB" --count-only
    serre-weights serre common --p 5 --f 7 --h 4865171564 --gamma 58923 --gamma-prime 77258

Results go to stdout; diagnostics and logs go to stderr. Exit codes: 2 for
invalid input, 3 when the sampler gives up, 4 for an unsupported parameter.
"""

import asyncio
import itertools
import json
import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, List, Optional, Union

import typer

from src.arithmetic import CoherentTriple, make_triple
from src.config import ConfigurationError, LogLevel, get_config, use_yaml_overlay
from src.core.exceptions import CircularDominance, InvalidGene, SamplerFailure, SerreWeightsError, UnsupportedPrime
from src.core.logging_setup import setup_logging
from src.genes import (
    Gene,
    dominant_letters,
    enumerate_genes,
    gene_of_triple,
    gene_text,
    is_degenerate,
    is_viable,
    parse_fragment,
    parse_gene,
    render_gene,
    sample_with_retries,
    use_color,
)
from src.kisin import (
    decompose,
    presentation_of_fragment,
    presentation_of_gene,
    reduce,
    render_presentation,
)
from src.serre import (
    common_weights_fast,
    count_common_weights,
    render_serre_weight,
    weights_of_rep,
    weights_of_type,
)
from src.weights import count_weights, iter_gene_weights

from .batch import dump_results, run_batch
from .handlers import gene_payload, json_int, parse_number


logger = logging.getLogger(__name__)

app = typer.Typer(
    name="serre-weights",
    help="Genes, combinatorial weights and Serre weights of coherent triples",
    no_args_is_help=True,
)

EXIT_INVALID = 2
EXIT_SAMPLER = 3
EXIT_UNSUPPORTED = 4


class SerreKind(str, Enum):
    RHOBAR = "rhobar"
    TYPE = "type"
    COMMON = "common"


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn library errors into a one-line diagnostic and an exit code."""
    try:
        yield
    except UnsupportedPrime as e:
        typer.echo(f"error: {e.message}", err=True)
        raise typer.Exit(code=EXIT_UNSUPPORTED)
    except SamplerFailure as e:
        typer.echo(f"error: {e.message}", err=True)
        raise typer.Exit(code=EXIT_SAMPLER)
    except SerreWeightsError as e:
        typer.echo(f"error: {e.message}", err=True)
        raise typer.Exit(code=EXIT_INVALID)
    except ValueError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_INVALID)


def _require(**values: Optional[str]) -> None:
    missing = [k.replace("_", "-") for k, v in values.items() if v is None]
    if missing:
        raise ValueError("missing option(s): " + ", ".join("--" + m for m in missing))


def _number(text: str, modulus: int, label: str) -> Union[int, List[int]]:
    value = parse_number(text)
    if isinstance(value, int) and not 0 <= value < modulus:
        logger.warning("%s = %d reduced modulo %d", label, value, modulus)
        typer.echo(f"note: {label} reduced to {value % modulus}", err=True)
    return value


def build_triple(
    p: Optional[int],
    f: Optional[int],
    h: Optional[str],
    gamma: Optional[str],
    gamma_prime: Optional[str],
) -> CoherentTriple:
    _require(p=p, f=f, h=h, gamma=gamma, gamma_prime=gamma_prime)
    q = p ** f
    return make_triple(
        p,
        f,
        _number(h, q * q - 1, "h"),
        _number(gamma, q - 1, "gamma"),
        _number(gamma_prime, q - 1, "gamma'"),
    )


def resolve_gene(
    gene: Optional[str],
    p: Optional[int],
    f: Optional[int],
    h: Optional[str],
    gamma: Optional[str],
    gamma_prime: Optional[str],
) -> Gene:
    """A gene given as text, or the gene of the triple."""
    if gene is not None:
        return parse_gene(gene)
    return gene_of_triple(build_triple(p, f, h, gamma, gamma_prime))


@app.callback()
def main(
    config: Optional[Path] = typer.Option(None, "--config", help="YAML file overlaid on the environment settings"),
    log_level: Optional[LogLevel] = typer.Option(None, "--log-level", help="Override the configured log level"),
) -> None:
    """Serre weights of two-dimensional mod p representations and tame types."""
    try:
        cfg = use_yaml_overlay(config) if config is not None else get_config()
    except ConfigurationError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_INVALID)
    logging_config = cfg.logging
    if log_level is not None:
        logging_config = logging_config.model_copy(update={"level": log_level})
    setup_logging(logging_config)


@app.command("gene")
def cmd_gene(
    p: Optional[int] = typer.Option(None, "--p", help="Odd prime p"),
    f: Optional[int] = typer.Option(None, "--f", help="Residue degree f"),
    h: Optional[str] = typer.Option(None, "--h", help="h mod q^2-1, decimal or big-endian digits a,b,c"),
    gamma: Optional[str] = typer.Option(None, "--gamma", help="gamma mod q-1"),
    gamma_prime: Optional[str] = typer.Option(None, "--gamma-prime", help="gamma' mod q-1"),
    gene: Optional[str] = typer.Option(None, "--gene", help="Render this gene instead: top/bottom rows"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
    text_output: bool = typer.Option(True, "--text/--no-text", help="Two-row text output"),
    dominance: bool = typer.Option(False, "--dominance", help="Mark the dominant letter of every column"),
) -> None:
    """Compute and render the gene of a coherent triple."""
    with exit_on_error():
        g = resolve_gene(gene, p, f, h, gamma, gamma_prime)
        if json_output:
            typer.echo(json.dumps(gene_payload(g)))
            return
        if not text_output:
            return
        dom = None
        if dominance and is_viable(g) and not is_degenerate(g):
            try:
                dom = dominant_letters(g)
            except CircularDominance:
                logger.info("every column of %s is a tie; no dominance line", gene_text(g))
        typer.echo(render_gene(g, dominance=dom, color=dom is not None and use_color()))


@app.command("weights")
def cmd_weights(
    gene: Optional[str] = typer.Option(None, "--gene", help="Gene as top/bottom rows"),
    p: Optional[int] = typer.Option(None, "--p"),
    f: Optional[int] = typer.Option(None, "--f"),
    h: Optional[str] = typer.Option(None, "--h"),
    gamma: Optional[str] = typer.Option(None, "--gamma"),
    gamma_prime: Optional[str] = typer.Option(None, "--gamma-prime"),
    count_only: bool = typer.Option(False, "--count-only", help="Print the number of weights only"),
    limit: Optional[int] = typer.Option(None, "--limit", min=0, help="Stream the first N weights"),
) -> None:
    """List or count the combinatorial weights of a gene."""
    with exit_on_error():
        g = resolve_gene(gene, p, f, h, gamma, gamma_prime)
        if count_only:
            typer.echo(str(count_weights(g)))
            return
        stream = iter_gene_weights(g)
        if limit is None:
            weights = sorted(stream)
        else:
            weights = list(itertools.islice(stream, limit))
        for w in weights:
            typer.echo("(" + ", ".join(str(b) for b in w) + ")")


@app.command("serre")
def cmd_serre(
    kind: SerreKind = typer.Argument(..., help="rhobar, type or common"),
    p: Optional[int] = typer.Option(None, "--p"),
    f: Optional[int] = typer.Option(None, "--f"),
    h: Optional[str] = typer.Option(None, "--h"),
    gamma: Optional[str] = typer.Option(None, "--gamma"),
    gamma_prime: Optional[str] = typer.Option(None, "--gamma-prime"),
    count_only: bool = typer.Option(False, "--count-only", help="Print the number of weights only"),
) -> None:
    """Serre weights of the representation, of the type, or common to both."""
    with exit_on_error():
        if kind == SerreKind.RHOBAR:
            _require(p=p, f=f, h=h)
            weights = weights_of_rep(p, f, _number(h, p ** (2 * f) - 1, "h"))
        elif kind == SerreKind.TYPE:
            _require(p=p, f=f, gamma=gamma, gamma_prime=gamma_prime)
            q = p ** f
            weights = weights_of_type(p, f, _number(gamma, q - 1, "gamma"), _number(gamma_prime, q - 1, "gamma'"))
        else:
            t = build_triple(p, f, h, gamma, gamma_prime)
            if count_only:
                typer.echo(str(count_common_weights(t)))
                return
            weights = common_weights_fast(t)
        if count_only:
            typer.echo(str(len(weights)))
            return
        for w in weights:
            typer.echo(render_serre_weight(w))


@app.command("sample")
def cmd_sample(
    gene: str = typer.Argument(..., help="Gene as top/bottom rows"),
    p: int = typer.Option(5, "--p", help="Odd prime p >= 5"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for reproducible draws"),
    retries: Optional[int] = typer.Option(None, "--retries", min=1, help="Draws before giving up"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
) -> None:
    """Draw a uniform coherent triple with the given gene."""
    with exit_on_error():
        g = parse_gene(gene)
        t = sample_with_retries(g, p, seed=seed, max_retries=retries)
        if json_output:
            typer.echo(json.dumps({k: json_int(v) for k, v in t.as_dict().items()}))
        else:
            typer.echo(t.render())


@app.command("kisin")
def cmd_kisin(
    text: str = typer.Argument(..., help="Gene or fragment as top/bottom rows"),
    fragment: bool = typer.Option(False, "--fragment", help="Read the rows as a fragment"),
    show_components: bool = typer.Option(False, "--decompose", help="List the components of a gene"),
) -> None:
    """Print the Kisin presentation of a gene or a fragment."""
    with exit_on_error():
        if not fragment:
            try:
                g = parse_gene(text)
            except InvalidGene:
                fragment = True
        if fragment:
            F = parse_fragment(text)
            typer.echo(render_presentation(presentation_of_fragment(F)))
            result = reduce(F)
            typer.echo(f"reduced: n={result.n} {result.reduced} case ({result.case.value})")
            return
        typer.echo(render_presentation(presentation_of_gene(g)))
        if show_components:
            for comp in decompose(g):
                cols = ",".join(str(i) for i in comp.columns)
                typer.echo(f"component [{cols}] count={comp.count}")


@app.command("genes")
def cmd_genes(
    f: int = typer.Argument(..., min=2, help="Residue degree"),
    count_only: bool = typer.Option(False, "--count-only"),
    viable_only: bool = typer.Option(False, "--viable-only", help="Skip genes with a column (O, O)"),
) -> None:
    """List every valid gene with 2f letters."""
    genes = (g for g in enumerate_genes(f) if not viable_only or is_viable(g))
    if count_only:
        typer.echo(str(sum(1 for _ in genes)))
        return
    for g in genes:
        typer.echo(gene_text(g))


@app.command("batch")
def cmd_batch(
    path: Path = typer.Argument(..., help="JSONL file, one request per line"),
    concurrency: Optional[int] = typer.Option(None, "--concurrency", min=1, help="Records processed at once"),
) -> None:
    """Process a JSONL batch; one result object per record, in input order."""
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        typer.echo(f"error: cannot read {path}: {e}", err=True)
        raise typer.Exit(code=EXIT_INVALID)
    results = asyncio.run(run_batch(lines, concurrency))
    if results:
        typer.echo(dump_results(results))


def run() -> None:
    app()
