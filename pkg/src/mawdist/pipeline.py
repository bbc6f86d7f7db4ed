"""End-to-end run: FASTA in, distance matrix and optional tree out."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .alphabet import Alphabet, InvariantError, SequenceInputError
from .fasta import read_fasta
from .measures import (MEASURES, DistanceMatrix, RatioReport, build_profiles,
                       matrix_from_profiles, ratio_from_profiles)
from .phylogeny import PhyloTree, build_tree

MATRIX_FORMATS = ("tsv", "csv", "phylip")
TREE_METHODS = ("upgma", "nj")


@dataclass(frozen=True)
class RunConfig:
    measure: str = "delta"
    max_length: int | None = None
    tree: str | None = None
    alphabet: str | None = None
    matrix_format: str = "tsv"
    precision: int = 6
    skip_invalid: bool = False
    ratios: bool = False

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise SequenceInputError(f"unknown measure {self.measure!r}")
        if self.measure == "distl" and (self.max_length is None or self.max_length < 1):
            raise SequenceInputError("measure 'distl' requires a maximum length >= 1")
        if self.tree not in (None, *TREE_METHODS):
            raise SequenceInputError(f"unknown tree method {self.tree!r}")
        if self.matrix_format not in MATRIX_FORMATS:
            raise SequenceInputError(f"unknown matrix format {self.matrix_format!r}")
        if not 1 <= self.precision <= 17:
            raise SequenceInputError("precision must be between 1 and 17")

    def get_alphabet(self) -> Alphabet | None:
        return Alphabet.from_string(self.alphabet.upper()) if self.alphabet else None


@dataclass
class PipelineResult:
    matrix: DistanceMatrix
    tree: PhyloTree | None = None
    ratios: RatioReport | None = None


def run_records(records, config: RunConfig) -> PipelineResult:
    """Compute the configured artifacts from already-parsed records."""
    _, profiles = build_profiles(records, config.get_alphabet(), min_count=2)
    matrix = matrix_from_profiles(profiles, config.measure, config.max_length)
    try:
        matrix.validate()
    except SequenceInputError as exc:
        raise InvariantError(f"computed matrix is malformed: {exc}") from exc
    tree = build_tree(matrix, config.tree) if config.tree else None
    ratios = ratio_from_profiles(profiles, check=True) if config.ratios else None
    return PipelineResult(matrix, tree, ratios)


def run_pipeline(config: RunConfig, fasta_path: str | Path, output: str | Path | None = None,
                 tree_output: str | Path | None = None,
                 ratio_output: str | Path | None = None) -> PipelineResult:
    """Read ``fasta_path``, compute, and write whichever outputs have paths."""
    records = read_fasta(fasta_path, alphabet=config.get_alphabet(), skip_invalid=config.skip_invalid)
    result = run_records(records, config)
    if output is not None:
        Path(output).write_text(result.matrix.to_text(config.matrix_format, config.precision))
    if tree_output is not None and result.tree is not None:
        Path(tree_output).write_text(result.tree.to_newick() + "\n")
    if ratio_output is not None and result.ratios is not None:
        Path(ratio_output).write_text(result.ratios.to_tsv(config.precision))
    return result
