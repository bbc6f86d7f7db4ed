"""Command-line interface: ``mawdist {maw,dist,tree,compare}``.

Exit status is 0 on success, 2 for input errors and 3 when an internal
consistency check fails.
"""
from __future__ import annotations

import functools
import sys

import click

from .alphabet import Alphabet, InvariantError, SequenceInputError
from .fasta import parse_fasta
from .maw import compute_maws, filter_by_length
from .measures import MEASURES, DistanceMatrix
from .pipeline import MATRIX_FORMATS, TREE_METHODS, RunConfig, run_records
from .phylogeny import build_tree

EXIT_INPUT = 2
EXIT_INVARIANT = 3

settings = dict(help_option_names=["-h", "--help"])


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SequenceInputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        except InvariantError as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(EXIT_INVARIANT)
    return wrapper


def _emit(text: str, output) -> None:
    if output is None or output == "-":
        click.echo(text, nl=False)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _read_records(handle, alphabet, skip_invalid):
    return parse_fasta(handle, alphabet=alphabet.upper() if alphabet else None,
                       skip_invalid=skip_invalid)


input_arg = click.argument("input", type=click.File("r"))
alphabet_opt = click.option("--alphabet", default=None, metavar="SYMBOLS",
                            help="Explicit alphabet, e.g. ACGT (default: union of observed symbols).")
skip_opt = click.option("--skip-invalid", is_flag=True,
                        help="Drop records with symbols outside --alphabet instead of failing.")
output_opt = click.option("--output", "-o", default=None, metavar="PATH", help="Write to PATH instead of stdout.")
precision_opt = click.option("--precision", type=click.IntRange(1, 17), default=6, show_default=True,
                             help="Significant digits for printed values.")
measure_opt = click.option("--measure", type=click.Choice(MEASURES), default="delta", show_default=True)
maxlen_opt = click.option("--maxlen", type=click.IntRange(min=1), default=None,
                          help="Maximum MAW length (required for --measure distl).")


@click.group(context_settings=settings)
def cli():
    """Alignment-free sequence comparison with minimal absent words."""


@cli.command()
@input_arg
@alphabet_opt
@skip_opt
@maxlen_opt
@output_opt
@_guarded
def maw(input, alphabet, skip_invalid, maxlen, output):
    """List the minimal absent words of every record in INPUT."""
    records = _read_records(input, alphabet, skip_invalid)
    if not records:
        raise SequenceInputError("no records in input")
    if alphabet:
        sigma = Alphabet.from_string(alphabet.upper())
    else:
        sigma = Alphabet.from_sequences(r.sequence for r in records)
    chunks = []
    for r in records:
        m = compute_maws(r.sequence, sigma, r.id)
        if maxlen is not None:
            m = filter_by_length(m, maxlen)
        chunks.append(f">{r.id}\n")
        chunks.extend(w + "\n" for w in m.canonical())
    _emit("".join(chunks), output)


@cli.command()
@input_arg
@measure_opt
@maxlen_opt
@alphabet_opt
@skip_opt
@click.option("--format", "fmt", type=click.Choice(MATRIX_FORMATS), default="tsv", show_default=True)
@precision_opt
@output_opt
@click.option("--tree", type=click.Choice(TREE_METHODS), default=None, help="Also build a tree.")
@click.option("--tree-output", default=None, metavar="PATH",
              help="Where to write the Newick tree (default: after the matrix on stdout).")
@_guarded
def dist(input, measure, maxlen, alphabet, skip_invalid, fmt, precision, output, tree, tree_output):
    """Pairwise distance matrix of the records in INPUT."""
    config = RunConfig(measure=measure, max_length=maxlen, tree=tree, alphabet=alphabet,
                       matrix_format=fmt, precision=precision, skip_invalid=skip_invalid)
    records = _read_records(input, alphabet, skip_invalid)
    result = run_records(records, config)
    _emit(result.matrix.to_text(fmt, precision), output)
    if result.tree is not None:
        newick = result.tree.to_newick() + "\n"
        if tree_output is None and (output is None or output == "-"):
            click.echo(newick, nl=False)
        else:
            _emit(newick, tree_output or f"{output}.nwk")


@cli.command()
@input_arg
@click.option("--tree", "--method", "method", type=click.Choice(TREE_METHODS), default="nj", show_default=True)
@measure_opt
@maxlen_opt
@alphabet_opt
@skip_opt
@click.option("--no-lengths", is_flag=True, help="Emit topology only.")
@click.option("--ascii", "as_ascii", is_flag=True, help="Print an indented text rendering instead of Newick.")
@output_opt
@_guarded
def tree(input, method, measure, maxlen, alphabet, skip_invalid, no_lengths, as_ascii, output):
    """Build a tree from a FASTA file or a square PHYLIP distance matrix."""
    text = input.read()
    first = next((line for line in text.splitlines() if line.strip()), "")
    if first.lstrip().startswith(">"):
        config = RunConfig(measure=measure, max_length=maxlen, tree=method, alphabet=alphabet,
                           skip_invalid=skip_invalid)
        t = run_records(_read_records(text, alphabet, skip_invalid), config).tree
    else:
        t = build_tree(DistanceMatrix.from_phylip(text), method)
    _emit(t.ascii() if as_ascii else t.to_newick(include_lengths=not no_lengths) + "\n", output)


@cli.command()
@input_arg
@alphabet_opt
@skip_opt
@precision_opt
@output_opt
@_guarded
def compare(input, alphabet, skip_invalid, precision, output):
    """Per-pair sizes of the symmetric difference and the reduced MAW set."""
    config = RunConfig(alphabet=alphabet, precision=precision, skip_invalid=skip_invalid, ratios=True)
    result = run_records(_read_records(input, alphabet, skip_invalid), config)
    _emit(result.ratios.to_tsv(precision), output)


def main():
    cli()


if __name__ == "__main__":
    main()
