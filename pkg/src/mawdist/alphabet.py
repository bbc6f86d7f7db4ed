"""Alphabets, words, and elementary factor predicates.

Words are plain ``str`` objects. An :class:`Alphabet` fixes the ambient symbol
set and the canonical ordering used for every listing this package emits:
shorter words first, ties broken lexicographically by alphabet rank.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class SequenceInputError(ValueError):
    """Raised for malformed user input (bad symbols, duplicate ids, ...)."""


class InvariantError(RuntimeError):
    """Raised when an internal consistency check fails."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free set of single-character symbols."""

    symbols: tuple[str, ...]
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise SequenceInputError("alphabet must contain at least one symbol")
        for s in symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise SequenceInputError(f"alphabet symbols must be single characters, got {s!r}")
        if len(set(symbols)) != len(symbols):
            raise SequenceInputError(f"duplicate symbols in alphabet {''.join(symbols)!r}")
        object.__setattr__(self, "symbols", symbols)
        rank = {s: i for i, s in enumerate(symbols)}
        object.__setattr__(self, "_rank", rank)
        # maps each symbol to a character whose code point is its rank, so that
        # plain string comparison of translated words follows alphabet order
        object.__setattr__(self, "_table", {ord(s): chr(i) for s, i in rank.items()})

    @classmethod
    def from_string(cls, symbols: str) -> "Alphabet":
        return cls(tuple(symbols))

    @classmethod
    def from_sequences(cls, sequences: Iterable[str]) -> "Alphabet":
        """Sorted union of the symbols observed in ``sequences``."""
        seen: set[str] = set()
        for s in sequences:
            seen.update(s)
        if not seen:
            raise SequenceInputError("cannot infer an alphabet from empty sequences")
        return cls(tuple(sorted(seen)))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._rank

    def __str__(self) -> str:
        return "".join(self.symbols)

    def rank(self, symbol: str) -> int:
        return self._rank[symbol]

    def validate(self, word: str, what: str = "word") -> str:
        """Return ``word`` unchanged, raising if it uses a foreign symbol."""
        bad = set(word).difference(self._rank)
        if bad:
            raise SequenceInputError(
                f"{what} contains symbols outside alphabet {str(self)!r}: {''.join(sorted(bad))!r}"
            )
        return word

    def covers(self, word: str) -> bool:
        return set(word).issubset(self._rank)

    def sort_key(self, word: str) -> tuple[int, str]:
        return len(word), word.translate(self._table)

    def canonical(self, words: Iterable[str]) -> list[str]:
        """Words sorted by length, then by alphabet order."""
        return sorted(words, key=self.sort_key)

    def encode(self, word: str) -> list[int]:
        rank = self._rank
        return [rank[c] for c in word]


@dataclass(frozen=True)
class Sequence:
    """A labelled word, e.g. one taxon's coding sequence."""

    id: str
    sequence: str

    def __post_init__(self):
        if not self.id:
            raise SequenceInputError("sequence id must be nonempty")

    def __len__(self) -> int:
        return len(self.sequence)


class WordSet(frozenset):
    """Immutable set of words.

    ``antifactorial`` records a *claim* that no element is a proper factor of
    another; :func:`mawdist.set_algebra.is_antifactorial` checks it.
    """

    antifactorial: bool

    def __new__(cls, words: Iterable[str] = (), antifactorial: bool = False):
        self = super().__new__(cls, words)
        self.antifactorial = antifactorial
        return self

    def __repr__(self) -> str:
        return f"{type(self).__name__}({sorted(self, key=_plain_key)!r})"

    def canonical(self, alphabet: Alphabet | None = None) -> list[str]:
        if alphabet is None:
            return sorted(self, key=_plain_key)
        return alphabet.canonical(self)


def _plain_key(word: str) -> tuple[int, str]:
    return len(word), word


def is_factor(u: str, v: str, alphabet: Alphabet | None = None) -> bool:
    """True iff ``v = z u w`` for some words ``z``, ``w``.

    When ``alphabet`` is given both words are validated against it.
    """
    if alphabet is not None:
        alphabet.validate(u)
        alphabet.validate(v)
    return u in v


def factors(v: str) -> WordSet:
    """All factors of ``v``, including the empty word and ``v`` itself.

    Quadratic in ``len(v)``; intended for oracles and tests only.
    """
    n = len(v)
    return WordSet(v[i:j] for i in range(n + 1) for j in range(i, n + 1))


def card(words) -> int:
    return len(words)


def total_length(words) -> int:
    """Sum of the lengths of the words."""
    return sum(map(len, words))
