"""Length-weighted distances between sequences and pairwise matrices.

``mu(X) = sum(1 / |w|**2 for w in X)``. The classical distance applies ``mu``
to the full symmetric difference of two MAW sets (optionally length-capped);
``delta`` applies it to the reduced set of MAWs of one word that occur in the
other.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence as SequenceT

import numpy as np

from .alphabet import Alphabet, InvariantError, SequenceInputError, card, total_length
from .maw import FactorIndex, MawSet, compute_maws, filter_by_length
from .set_algebra import PairComparison, compare_indexed, symmetric_difference

MEASURES = ("delta", "dist", "distl")


def mu(words, exact: bool = False) -> float | Fraction:
    """Length-weighted index of a set of words.

    Terms are accumulated shortest-first in a fixed order so that the float
    result does not depend on set iteration order. With ``exact=True`` the
    sum is a :class:`~fractions.Fraction`.
    """
    ordered = sorted(words, key=lambda w: (len(w), w))
    if ordered and not ordered[0]:
        raise SequenceInputError("the empty word has no length-weighted contribution")
    if exact:
        return sum((Fraction(1, len(w) ** 2) for w in ordered), Fraction(0))
    total = 0.0
    for w in ordered:
        total += 1.0 / (len(w) * len(w))
    return total


def _pair_alphabet(x: str, y: str, alphabet) -> Alphabet:
    if alphabet is None:
        return Alphabet.from_sequences([x, y])
    if isinstance(alphabet, str):
        return Alphabet.from_string(alphabet)
    return alphabet


def dist(x: str, y: str, alphabet: Alphabet | str | None = None, exact: bool = False):
    a = _pair_alphabet(x, y, alphabet)
    return mu(symmetric_difference(compute_maws(x, a), compute_maws(y, a)), exact=exact)


def dist_l(x: str, y: str, alphabet: Alphabet | str | None = None, max_length: int = 1,
           exact: bool = False):
    """``dist`` restricted to MAWs of length at most ``max_length``."""
    a = _pair_alphabet(x, y, alphabet)
    mx = filter_by_length(compute_maws(x, a), max_length)
    my = filter_by_length(compute_maws(y, a), max_length)
    return mu(symmetric_difference(mx, my), exact=exact)


def delta(x: str, y: str, alphabet: Alphabet | str | None = None, exact: bool = False):
    a = _pair_alphabet(x, y, alphabet)
    ix, iy = FactorIndex(x, a), FactorIndex(y, a)
    cmp = compare_indexed(ix, compute_maws(x, a, index=ix), iy, compute_maws(y, a, index=iy))
    return mu(cmp.d_set, exact=exact)


@dataclass(frozen=True)
class MawProfile:
    """A sequence together with its index and MAW set, computed once."""

    id: str
    sequence: str
    index: FactorIndex
    maws: MawSet

    @classmethod
    def build(cls, seq_id: str, sequence: str, alphabet: Alphabet) -> "MawProfile":
        index = FactorIndex(sequence, alphabet)
        return cls(seq_id, sequence, index, compute_maws(sequence, alphabet, seq_id, index=index))


def _records(seqs) -> list[tuple[str, str]]:
    """Normalise sequence inputs into ``(id, sequence)`` pairs."""
    out = []
    for i, s in enumerate(seqs):
        if isinstance(s, str):
            out.append((f"seq{i + 1}", s))
        elif isinstance(s, tuple):
            out.append((str(s[0]), s[1]))
        else:
            out.append((s.id, s.sequence))
    ids = [i for i, _ in out]
    if len(set(ids)) != len(ids):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise SequenceInputError(f"duplicate sequence ids: {', '.join(dup)}")
    return out


def build_profiles(seqs, alphabet: Alphabet | str | None = None,
                   min_count: int = 1) -> tuple[Alphabet, list[MawProfile]]:
    """Index every sequence once over a common alphabet.

    The default alphabet is the union of symbols over all inputs.
    """
    records = _records(seqs)
    if len(records) < min_count:
        raise SequenceInputError(f"need at least {min_count} sequences, got {len(records)}")
    if alphabet is None:
        alphabet = Alphabet.from_sequences(s for _, s in records)
    elif isinstance(alphabet, str):
        alphabet = Alphabet.from_string(alphabet)
    for sid, s in records:
        alphabet.validate(s, f"sequence {sid!r}")
    return alphabet, [MawProfile.build(sid, s, alphabet) for sid, s in records]


def pair_value(px: MawProfile, py: MawProfile, measure: str = "delta",
               max_length: int | None = None) -> float:
    if measure == "delta":
        return mu(compare_indexed(px.index, px.maws, py.index, py.maws).d_set)
    if measure == "dist":
        return mu(symmetric_difference(px.maws, py.maws))
    if measure == "distl":
        if max_length is None:
            raise SequenceInputError("measure 'distl' needs a maximum MAW length")
        return mu(symmetric_difference(filter_by_length(px.maws, max_length),
                                       filter_by_length(py.maws, max_length)))
    raise SequenceInputError(f"unknown measure {measure!r}; expected one of {', '.join(MEASURES)}")


def measure_tag(measure: str, max_length: int | None = None) -> str:
    return f"distl({max_length})" if measure == "distl" else measure


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Labelled symmetric dissimilarity matrix with a zero diagonal."""

    labels: tuple[str, ...]
    values: np.ndarray
    measure: str = "delta"

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        labels = tuple(self.labels)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise SequenceInputError(f"distance matrix must be square, got shape {values.shape}")
        if len(labels) != values.shape[0]:
            raise SequenceInputError("number of labels does not match matrix size")
        if len(set(labels)) != len(labels):
            raise SequenceInputError("duplicate labels in distance matrix")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, key: tuple[str, str]) -> float:
        a, b = key
        return float(self.values[self.labels.index(a), self.labels.index(b)])

    def validate(self, atol: float = 1e-12) -> "DistanceMatrix":
        """Raise ``SequenceInputError`` unless symmetric, nonnegative, zero-diagonal."""
        v = self.values
        if not np.all(np.isfinite(v)):
            raise SequenceInputError("distance matrix contains non-finite values")
        if not np.allclose(v, v.T, rtol=0, atol=atol):
            raise SequenceInputError("distance matrix is not symmetric")
        if np.any(v < -atol):
            raise SequenceInputError("distance matrix has negative entries")
        if np.any(np.abs(np.diag(v)) > atol):
            raise SequenceInputError("distance matrix has a nonzero diagonal")
        return self

    def reorder(self, labels: SequenceT[str]) -> "DistanceMatrix":
        idx = [self.labels.index(l) for l in labels]
        return DistanceMatrix(tuple(labels), self.values[np.ix_(idx, idx)], self.measure)

    def to_text(self, fmt: str = "tsv", precision: int = 6) -> str:
        if fmt == "tsv":
            return _delimited(self.labels, self.values, "\t", precision)
        if fmt == "csv":
            return _delimited(self.labels, self.values, ",", precision)
        if fmt == "phylip":
            return self.to_phylip(precision)
        raise SequenceInputError(f"unknown matrix format {fmt!r}")

    def to_phylip(self, precision: int = 6) -> str:
        width = max(10, *(len(l) for l in self.labels))
        lines = [f"{len(self.labels)}"]
        for label, row in zip(self.labels, self.values):
            lines.append(label.ljust(width) + " " + " ".join(_fmt(x, precision) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_phylip(cls, text: str, measure: str = "unknown") -> "DistanceMatrix":
        """Parse a square (non-interleaved) PHYLIP distance matrix."""
        tokens_by_line = [line.split() for line in text.splitlines() if line.strip()]
        if not tokens_by_line:
            raise SequenceInputError("empty PHYLIP input")
        try:
            n = int(tokens_by_line[0][0])
        except ValueError:
            raise SequenceInputError("PHYLIP matrix must start with the taxon count") from None
        labels, rows = [], []
        tokens = [t for line in tokens_by_line[1:] for t in line]
        pos = 0
        for _ in range(n):
            if pos + n + 1 > len(tokens):
                raise SequenceInputError("truncated PHYLIP matrix")
            labels.append(tokens[pos])
            try:
                rows.append([float(t) for t in tokens[pos + 1:pos + 1 + n]])
            except ValueError as exc:
                raise SequenceInputError(f"bad PHYLIP value: {exc}") from None
            pos += n + 1
        return cls(tuple(labels), np.array(rows), measure)


def _fmt(x: float, precision: int) -> str:
    return format(float(x), f".{precision}g")


def _delimited(labels, values, sep: str, precision: int) -> str:
    buf = io.StringIO()
    buf.write(sep.join(["", *labels]) + "\n")
    for label, row in zip(labels, values):
        buf.write(sep.join([label, *(_fmt(x, precision) for x in row)]) + "\n")
    return buf.getvalue()


def matrix_from_profiles(profiles: list[MawProfile], measure: str = "delta",
                         max_length: int | None = None) -> DistanceMatrix:
    k = len(profiles)
    values = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            values[i, j] = values[j, i] = pair_value(profiles[i], profiles[j], measure, max_length)
    return DistanceMatrix(tuple(p.id for p in profiles), values, measure_tag(measure, max_length))


def build_matrix(seqs, measure: str = "delta", alphabet: Alphabet | str | None = None,
                 max_length: int | None = None) -> DistanceMatrix:
    """Pairwise distance matrix over at least two labelled sequences.

    ``seqs`` may hold :class:`~mawdist.alphabet.Sequence` or FASTA records,
    ``(id, sequence)`` tuples, or bare strings (labelled ``seq1``, ...).
    """
    if measure not in MEASURES:
        raise SequenceInputError(f"unknown measure {measure!r}; expected one of {', '.join(MEASURES)}")
    if measure == "distl" and (max_length is None or max_length < 1):
        raise SequenceInputError("measure 'distl' needs a maximum MAW length >= 1")
    _, profiles = build_profiles(seqs, alphabet, min_count=2)
    return matrix_from_profiles(profiles, measure, max_length)


@dataclass(frozen=True, eq=False)
class RatioReport:
    """Pairwise size ratios of the reduced set against the symmetric difference.

    Raw counts are kept alongside the ratios. Diagonal ratios are 0, as are
    ratios between identical sequences (both sets empty).
    """

    labels: tuple[str, ...]
    card_sym_diff: np.ndarray
    card_d: np.ndarray
    length_sym_diff: np.ndarray
    length_d: np.ndarray

    @property
    def card_ratios(self) -> np.ndarray:
        return _ratio(self.card_d, self.card_sym_diff)

    @property
    def length_ratios(self) -> np.ndarray:
        return _ratio(self.length_d, self.length_sym_diff)

    def rows(self) -> Iterable[tuple]:
        """Upper-triangle rows ``(x, y, card_sd, card_d, card_ratio, s_sd, s_d, length_ratio)``."""
        cr, lr = self.card_ratios, self.length_ratios
        k = len(self.labels)
        for i in range(k):
            for j in range(i + 1, k):
                yield (self.labels[i], self.labels[j],
                       int(self.card_sym_diff[i, j]), int(self.card_d[i, j]), float(cr[i, j]),
                       int(self.length_sym_diff[i, j]), int(self.length_d[i, j]), float(lr[i, j]))

    def to_tsv(self, precision: int = 6) -> str:
        header = "x_id\ty_id\tcard_sym_diff\tcard_d\tcard_ratio\ts_sym_diff\ts_d\tlength_ratio"
        lines = [header]
        for x, y, csd, cd, cr, ssd, sd, lr in self.rows():
            lines.append("\t".join([x, y, str(csd), str(cd), _fmt(cr, precision),
                                    str(ssd), str(sd), _fmt(lr, precision)]))
        return "\n".join(lines) + "\n"


def _ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    out = np.zeros(num.shape)
    np.divide(num, den, out=out, where=den > 0)
    return out


def ratio_from_profiles(profiles: list[MawProfile], check: bool = False) -> RatioReport:
    k = len(profiles)
    arrays = [np.zeros((k, k), dtype=np.int64) for _ in range(4)]
    csd, cd, ssd, sd = arrays
    for i in range(k):
        for j in range(i + 1, k):
            cmp: PairComparison = compare_indexed(profiles[i].index, profiles[i].maws,
                                                  profiles[j].index, profiles[j].maws)
            if check:
                cmp.check()
            csd[i, j] = csd[j, i] = card(cmp.sym_diff)
            cd[i, j] = cd[j, i] = card(cmp.d_set)
            ssd[i, j] = ssd[j, i] = total_length(cmp.sym_diff)
            sd[i, j] = sd[j, i] = total_length(cmp.d_set)
    if np.any(cd > csd) or np.any(sd > ssd):
        raise InvariantError("reduced set larger than the symmetric difference")
    return RatioReport(tuple(p.id for p in profiles), csd, cd, ssd, sd)


def build_ratio_report(seqs, alphabet: Alphabet | str | None = None) -> RatioReport:
    _, profiles = build_profiles(seqs, alphabet, min_count=2)
    return ratio_from_profiles(profiles)
