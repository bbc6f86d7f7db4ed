"""Minimal absent words via a suffix automaton.

A word ``w = b u a`` (``b``, ``a`` letters) is a minimal absent word of ``v``
iff ``w`` does not occur in ``v`` while ``b u`` and ``u a`` both do. In the
suffix automaton of ``v`` every such ``b u`` is the shortest word of some
state ``p`` and ``u`` the longest word of its suffix link, so the MAWs of
length at least two are exactly

    { shortest(p) + a : delta(p, a) undefined, delta(link(p), a) defined }

while a letter is a MAW iff the root has no transition on it. Each state
contributes at most ``sigma`` words, hence ``Card(M(v)) <= sigma * (2|v| + 1)``.
"""
from __future__ import annotations

from .alphabet import Alphabet, SequenceInputError, WordSet, factors

#: Longest input accepted by :func:`compute_maws_oracle`.
ORACLE_MAX_LENGTH = 64


class FactorIndex:
    """Suffix automaton of a word over a fixed alphabet.

    Transitions live in one flat list of ``n_states * sigma`` slots (``-1``
    for undefined), which keeps construction at ``O(|v| sigma)`` time and
    memory without per-state dictionaries.
    """

    __slots__ = ("word", "alphabet", "sigma", "n_states", "_next", "_link", "_length", "_endpos")

    def __init__(self, word: str, alphabet: Alphabet | None = None):
        if alphabet is None:
            alphabet = Alphabet.from_sequences([word]) if word else None
        if alphabet is not None:
            alphabet.validate(word, "indexed word")
        self.word = word
        self.alphabet = alphabet
        self.sigma = sigma = len(alphabet) if alphabet is not None else 0

        cap = 2 * len(word) + 1
        nxt = [-1] * (cap * sigma)
        link = [-1] * cap
        length = [0] * cap
        endpos = [-1] * cap
        size = 1
        last = 0
        codes = alphabet.encode(word) if word else []
        for i, c in enumerate(codes):
            cur = size
            size += 1
            length[cur] = length[last] + 1
            endpos[cur] = i
            p = last
            while p != -1 and nxt[p * sigma + c] == -1:
                nxt[p * sigma + c] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = nxt[p * sigma + c]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = size
                    size += 1
                    length[clone] = length[p] + 1
                    endpos[clone] = endpos[q]
                    link[clone] = link[q]
                    base = q * sigma
                    nxt[clone * sigma:clone * sigma + sigma] = nxt[base:base + sigma]
                    while p != -1 and nxt[p * sigma + c] == q:
                        nxt[p * sigma + c] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur

        self.n_states = size
        del nxt[size * sigma:]
        del link[size:], length[size:], endpos[size:]
        self._next = nxt
        self._link = link
        self._length = length
        self._endpos = endpos

    def __len__(self) -> int:
        return len(self.word)

    def __contains__(self, u: str) -> bool:
        return self._walk(u) != -1

    def _walk(self, u: str) -> int:
        """State reached by reading ``u`` from the root, ``-1`` if absent."""
        if self.alphabet is None:
            return 0 if not u else -1
        rank = self.alphabet._rank
        nxt, sigma = self._next, self.sigma
        p = 0
        for ch in u:
            c = rank.get(ch)
            if c is None:
                return -1
            p = nxt[p * sigma + c]
            if p == -1:
                return -1
        return p

    def contains(self, u: str) -> bool:
        """True iff ``u`` is a factor of the indexed word."""
        return u in self

    def right_extensions(self, u: str) -> list[str]:
        """Letters ``a`` (alphabet order) such that ``u + a`` is a factor."""
        p = self._walk(u)
        if p == -1:
            return []
        row = self._next[p * self.sigma:(p + 1) * self.sigma]
        return [a for a, t in zip(self.alphabet, row) if t != -1]

    def left_extensions(self, u: str) -> list[str]:
        """Letters ``a`` (alphabet order) such that ``a + u`` is a factor."""
        if self.alphabet is None or self._walk(u) == -1:
            return []
        return [a for a in self.alphabet if self._walk(a + u) != -1]

    def table_size(self) -> int:
        """Number of transition slots held, ``n_states * sigma``."""
        return len(self._next)

    def absent_word_spans(self):
        """Yield ``(start, stop, letter)`` for each MAW of length >= 2.

        The word is ``self.word[start:stop] + letter``.
        """
        nxt, link, length, endpos = self._next, self._link, self._length, self._endpos
        sigma = self.sigma
        letters = self.alphabet.symbols if self.alphabet is not None else ()
        for p in range(1, self.n_states):
            s = link[p]
            row = nxt[p * sigma:(p + 1) * sigma]
            srow = nxt[s * sigma:(s + 1) * sigma]
            for a in range(sigma):
                if row[a] == -1 and srow[a] != -1:
                    stop = endpos[p] + 1
                    yield stop - length[s] - 1, stop, letters[a]


def build_index(word: str, alphabet: Alphabet | None = None) -> FactorIndex:
    return FactorIndex(word, alphabet)


class MawSet(WordSet):
    """Minimal absent words of one sequence with respect to an alphabet."""

    source_id: str | None
    alphabet: Alphabet

    def __new__(cls, words=(), alphabet: Alphabet | None = None, source_id: str | None = None):
        self = super().__new__(cls, words, antifactorial=True)
        self.alphabet = alphabet
        self.source_id = source_id
        return self

    def canonical(self, alphabet: Alphabet | None = None) -> list[str]:
        return super().canonical(alphabet or self.alphabet)

    def max_length(self) -> int:
        return max(map(len, self), default=0)


def _require_alphabet(word: str, alphabet) -> Alphabet:
    if alphabet is None:
        raise SequenceInputError("an explicit alphabet is required")
    if isinstance(alphabet, str):
        alphabet = Alphabet.from_string(alphabet)
    alphabet.validate(word)
    return alphabet


def compute_maws(word: str, alphabet: Alphabet | str, source_id: str | None = None,
                 index: FactorIndex | None = None) -> MawSet:
    """Set of minimal absent words of ``word`` over ``alphabet``.

    A prebuilt ``index`` over the same word and alphabet may be passed to
    avoid rebuilding it.
    """
    alphabet = _require_alphabet(word, alphabet)
    if index is None:
        index = FactorIndex(word, alphabet)
    elif index.word != word or index.alphabet != alphabet:
        raise SequenceInputError("index was built for a different word or alphabet")
    root = index._next[:index.sigma]
    out = [a for a, t in zip(alphabet, root) if t == -1]
    out.extend(word[i:j] + a for i, j, a in index.absent_word_spans())
    return MawSet(out, alphabet=alphabet, source_id=source_id)


def compute_maws_oracle(word: str, alphabet: Alphabet | str, max_length: int = ORACLE_MAX_LENGTH,
                        source_id: str | None = None) -> MawSet:
    """Brute-force minimal absent words by enumerating all factors.

    Only for cross-checking :func:`compute_maws` on short words.
    """
    if len(word) > max_length:
        raise ValueError(f"oracle refuses words longer than {max_length} (got {len(word)})")
    alphabet = _require_alphabet(word, alphabet)
    facts = factors(word)
    candidates = set(alphabet)
    candidates.update(a + f for a in alphabet for f in facts if f)
    out = [w for w in candidates
           if w not in facts and (len(w) == 1 or (w[:-1] in facts and w[1:] in facts))]
    return MawSet(out, alphabet=alphabet, source_id=source_id)


def filter_by_length(maws: MawSet, max_length: int) -> MawSet:
    """Elements of ``maws`` no longer than ``max_length``."""
    if max_length < 1:
        raise SequenceInputError(f"length bound must be >= 1, got {max_length}")
    return MawSet((w for w in maws if len(w) <= max_length),
                  alphabet=maws.alphabet, source_id=maws.source_id)
