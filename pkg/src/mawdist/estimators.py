"""scikit-learn compatible wrappers.

:class:`MawDistance` is a transformer mapping sequences to distances against
the sequences seen in ``fit``; :class:`UPGMA` and :class:`NeighborJoining`
fit a tree to a precomputed dissimilarity matrix.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .alphabet import Alphabet, SequenceInputError
from .measures import MEASURES, DistanceMatrix, MawProfile, build_profiles, pair_value
from .phylogeny import PhyloTree, neighbor_joining, upgma


def check_sequences(X, ids=None) -> list[tuple[str, str]]:
    """Validate sequence input and return upper-cased ``(id, sequence)`` pairs.

    Accepts strings, ``(id, sequence)`` tuples, or objects with ``id`` and
    ``sequence`` attributes (FASTA records). A 2-d array of single strings
    with one column, as produced by pandas/ColumnTransformer, is flattened.
    """
    if isinstance(X, str):
        raise SequenceInputError("expected a collection of sequences, got a single string")
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[1] == 1:
            X = X[:, 0]
        elif X.ndim != 1:
            raise SequenceInputError(f"expected a 1-d array of sequences, got shape {X.shape}")
    out = []
    for i, item in enumerate(X):
        if isinstance(item, str):
            out.append((f"seq{i + 1}", item))
        elif isinstance(item, tuple) and len(item) == 2:
            out.append((str(item[0]), item[1]))
        elif hasattr(item, "sequence"):
            out.append((item.id, item.sequence))
        else:
            raise SequenceInputError(f"cannot interpret element {i} as a sequence: {item!r}")
    if ids is not None:
        ids = list(ids)
        if len(ids) != len(out):
            raise SequenceInputError("ids and sequences differ in length")
        out = [(str(k), s) for k, (_, s) in zip(ids, out)]
    if not out:
        raise SequenceInputError("no sequences given")
    return [(k, s.upper()) for k, s in out]


class MawDistance(TransformerMixin, BaseEstimator):
    """Distances between sequences from their minimal absent words.

    Parameters
    ----------
    measure : {"delta", "dist", "distl"}
        ``delta`` uses the MAWs of one sequence that occur in the other;
        ``dist`` uses the full symmetric difference; ``distl`` caps MAW
        length at ``max_length``.
    max_length : int, optional
        Required for ``distl``.
    alphabet : str, optional
        Symbol set; defaults to the union of symbols seen in ``fit``.

    Attributes
    ----------
    alphabet_ : Alphabet
    labels_ : list of str
    profiles_ : list of MawProfile
    """

    def __init__(self, measure="delta", max_length=None, alphabet=None):
        self.measure = measure
        self.max_length = max_length
        self.alphabet = alphabet

    def _check_params(self):
        if self.measure not in MEASURES:
            raise ValueError(f"measure must be one of {MEASURES}, got {self.measure!r}")
        if self.measure == "distl" and (self.max_length is None or self.max_length < 1):
            raise ValueError("measure='distl' requires max_length >= 1")

    def fit(self, X, y=None, ids=None):
        self._check_params()
        records = check_sequences(X, ids)
        alphabet = Alphabet.from_string(self.alphabet.upper()) if self.alphabet else None
        self.alphabet_, self.profiles_ = build_profiles(records, alphabet)
        self.labels_ = [p.id for p in self.profiles_]
        self.n_features_out_ = len(self.profiles_)
        return self

    def transform(self, X, ids=None):
        """Distances of each row of ``X`` to every fitted sequence."""
        check_is_fitted(self, "profiles_")
        records = check_sequences(X, ids)
        out = np.empty((len(records), len(self.profiles_)))
        for i, (sid, s) in enumerate(records):
            p = MawProfile.build(sid, self.alphabet_.validate(s, f"sequence {sid!r}"), self.alphabet_)
            for j, q in enumerate(self.profiles_):
                out[i, j] = pair_value(p, q, self.measure, self.max_length)
        return out

    def fit_transform(self, X, y=None, ids=None):
        return self.fit(X, y, ids)._square()

    def _square(self):
        k = len(self.profiles_)
        out = np.zeros((k, k))
        for i in range(k):
            for j in range(i + 1, k):
                out[i, j] = out[j, i] = pair_value(self.profiles_[i], self.profiles_[j],
                                                   self.measure, self.max_length)
        return out

    def to_matrix(self) -> DistanceMatrix:
        """Labelled square matrix over the fitted sequences."""
        check_is_fitted(self, "profiles_")
        values = self._square()
        tag = f"distl({self.max_length})" if self.measure == "distl" else self.measure
        return DistanceMatrix(tuple(self.labels_), values, tag)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "profiles_")
        return np.asarray(self.labels_, dtype=object)


class _TreeEstimator(BaseEstimator):
    _builder = None

    def fit(self, X, y=None, labels=None):
        """Fit a tree to a square dissimilarity matrix.

        ``X`` may be a :class:`DistanceMatrix` or an array; array input takes
        ``labels`` (default ``"0"``, ``"1"``, ...).
        """
        if isinstance(X, DistanceMatrix):
            dm = X
        else:
            values = np.asarray(X, dtype=float)
            if labels is None:
                labels = [str(i) for i in range(values.shape[0])]
            dm = DistanceMatrix(tuple(str(l) for l in labels), values)
        self.labels_ = list(dm.labels)
        self.tree_: PhyloTree = type(self)._builder(dm)
        return self

    def to_newick(self, include_lengths=True) -> str:
        check_is_fitted(self, "tree_")
        return self.tree_.to_newick(include_lengths)

    def has_clade(self, labels) -> bool:
        check_is_fitted(self, "tree_")
        return self.tree_.has_clade(labels)


class UPGMA(_TreeEstimator):
    """Rooted ultrametric tree by average linkage. Fitted tree in ``tree_``."""

    _builder = staticmethod(upgma)


class NeighborJoining(_TreeEstimator):
    """Unrooted tree by neighbor joining. Fitted tree in ``tree_``."""

    _builder = staticmethod(neighbor_joining)
