"""Set constructions over pairs of MAW sets.

For words ``x`` and ``y`` the reduced difference set is

    D(x, y) = (F(x) & M(y)) | (F(y) & M(x))

i.e. the minimal absent words of one word that occur in the other. It is a
subset of ``M(x) ^ M(y)``, it is antifactorial, and it is exactly what remains
of ``M(x) ^ M(y)`` after discarding every word having a proper factor in the
same set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet, InvariantError, SequenceInputError, WordSet
from .maw import FactorIndex, MawSet, compute_maws


@dataclass(frozen=True)
class PairComparison:
    x_id: str
    y_id: str
    sym_diff: WordSet
    d_x_from_y: WordSet
    d_y_from_x: WordSet
    d_set: WordSet

    def check(self) -> None:
        """Raise ``InvariantError`` if the sets are mutually inconsistent."""
        if self.d_set != self.d_x_from_y | self.d_y_from_x:
            raise InvariantError(f"{self.x_id}/{self.y_id}: D is not the union of its directed parts")
        if not self.d_set <= self.sym_diff:
            raise InvariantError(f"{self.x_id}/{self.y_id}: D is not contained in the symmetric difference")
        if not is_antifactorial(self.d_set):
            raise InvariantError(f"{self.x_id}/{self.y_id}: D is not antifactorial")


def _check_same_alphabet(mx: WordSet, my: WordSet) -> None:
    ax = getattr(mx, "alphabet", None)
    ay = getattr(my, "alphabet", None)
    if ax is not None and ay is not None and ax != ay:
        raise SequenceInputError(f"alphabet mismatch: {str(ax)!r} vs {str(ay)!r}")


def symmetric_difference(mx: WordSet, my: WordSet) -> WordSet:
    _check_same_alphabet(mx, my)
    return WordSet(frozenset.symmetric_difference(mx, my))


def directed_d(x: str | FactorIndex, my: MawSet) -> WordSet:
    """MAWs of ``y`` that occur in ``x``.

    ``x`` may be a prebuilt :class:`FactorIndex`; membership is answered by
    index lookups, never by listing the factors of ``x``.
    """
    index = x if isinstance(x, FactorIndex) else FactorIndex(x, my.alphabet)
    return WordSet((w for w in my if w in index), antifactorial=True)


def build_d_set(x: str, y: str, alphabet: Alphabet | str | None = None,
                x_id: str = "x", y_id: str = "y") -> PairComparison:
    """Full comparison of ``x`` and ``y`` over a shared alphabet.

    If ``alphabet`` is omitted, the union of the symbols of both words is used.
    """
    if alphabet is None:
        alphabet = Alphabet.from_sequences([x, y]) if (x or y) else None
        if alphabet is None:
            raise SequenceInputError("cannot infer an alphabet from two empty words")
    elif isinstance(alphabet, str):
        alphabet = Alphabet.from_string(alphabet)
    ix, iy = FactorIndex(x, alphabet), FactorIndex(y, alphabet)
    mx = compute_maws(x, alphabet, x_id, index=ix)
    my = compute_maws(y, alphabet, y_id, index=iy)
    return compare_indexed(ix, mx, iy, my)


def compare_indexed(ix: FactorIndex, mx: MawSet, iy: FactorIndex, my: MawSet) -> PairComparison:
    """:func:`build_d_set` from precomputed indexes and MAW sets."""
    dxy = directed_d(ix, my)
    dyx = directed_d(iy, mx)
    return PairComparison(
        x_id=mx.source_id or "x",
        y_id=my.source_id or "y",
        sym_diff=symmetric_difference(mx, my),
        d_x_from_y=dxy,
        d_y_from_x=dyx,
        d_set=WordSet(dxy | dyx, antifactorial=True),
    )


def _has_proper_factor_in(word: str, members) -> bool:
    n = len(word)
    for k in range(n - 1, -1, -1):
        for i in range(n - k + 1):
            if word[i:i + k] in members:
                return True
    return False


def antifactorial_base(words) -> WordSet:
    """Drop every word that has a proper factor in the same set.

    This is the base of the ideal generated by ``words`` whenever that base is
    a subset of ``words``, which holds for symmetric differences of MAW sets.
    """
    members = frozenset(words)
    return WordSet((w for w in members if not _has_proper_factor_in(w, members)), antifactorial=True)


def is_antifactorial(words) -> bool:
    """True iff no element is a proper factor of another."""
    members = frozenset(words)
    return not any(_has_proper_factor_in(w, members) for w in members)
