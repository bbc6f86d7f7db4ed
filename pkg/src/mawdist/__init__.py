"""Alignment-free sequence comparison with minimal absent words."""
from .alphabet import (Alphabet, InvariantError, Sequence, SequenceInputError, WordSet, card,
                       factors, is_factor, total_length)
from .estimators import MawDistance, NeighborJoining, UPGMA
from .fasta import FastaRecord, format_fasta, load_beta_globin, parse_fasta, read_fasta
from .maw import (FactorIndex, MawSet, build_index, compute_maws, compute_maws_oracle,
                  filter_by_length)
from .measures import (DistanceMatrix, RatioReport, build_matrix, build_ratio_report, delta, dist,
                       dist_l, mu)
from .phylogeny import PhyloTree, has_clade, neighbor_joining, to_newick, upgma
from .pipeline import RunConfig, run_pipeline
from .set_algebra import (PairComparison, antifactorial_base, build_d_set, directed_d,
                          is_antifactorial, symmetric_difference)

__version__ = "0.1.0"
