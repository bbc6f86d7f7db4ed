import random

import pytest
from hypothesis import given, settings, strategies as st

from mawdist import (Alphabet, SequenceInputError, build_index, compute_maws, compute_maws_oracle,
                     filter_by_length, is_antifactorial)
from conftest import ABCD


def test_index_queries():
    idx = build_index("abaabab")
    assert "aab" in idx
    assert "bb" not in idx
    assert "" in idx
    assert "z" not in idx
    assert "a" not in build_index("", Alphabet.from_string("ab"))
    assert "a" not in build_index("")


def test_index_extensions():
    idx = build_index("abaabab")
    assert idx.right_extensions("ab") == ["a"]
    assert idx.right_extensions("a") == ["a", "b"]
    assert idx.left_extensions("ab") == ["a", "b"]
    assert idx.left_extensions("bb") == []


def test_index_size_is_linear():
    v = "abaababaabaab" * 5
    idx = build_index(v)
    assert idx.n_states <= 2 * len(v) + 1
    assert idx.table_size() == idx.n_states * 2


@pytest.mark.parametrize("fn", [compute_maws, compute_maws_oracle])
def test_golden_sets(fn):
    assert set(fn("abaabab", "ab")) == {"bb", "aaa", "baba", "aabaa"}
    assert set(fn("cbaabdcb", ABCD)) == {"ac", "ad", "bb", "bc", "ca", "cc", "cd", "da", "db", "dd",
                                        "aaa", "aba", "bab", "cbd", "dcba"}
    assert set(fn("abcba", ABCD)) == {"aa", "ac", "bb", "ca", "cc", "aba", "bab", "cbc", "d"}
    assert set(fn("a", "ab")) == {"b", "aa"}
    assert set(fn("", "ab")) == {"a", "b"}


def test_canonical_listing():
    assert compute_maws("abaabab", "ab").canonical() == ["bb", "aaa", "baba", "aabaa"]


def test_maws_reject_foreign_symbols():
    with pytest.raises(SequenceInputError):
        compute_maws("abx", "ab")
    with pytest.raises(SequenceInputError):
        compute_maws("ab", None)


def test_oracle_refuses_long_input():
    with pytest.raises(ValueError):
        compute_maws_oracle("a" * 65, "a")
    assert compute_maws_oracle("a" * 10, "a", max_length=10) == {"a" * 11}


def test_filter_by_length():
    m = compute_maws("abaabab", "ab")
    assert filter_by_length(m, 2) == {"bb"}
    assert filter_by_length(m, m.max_length()) == m
    # no length-1 MAW: both letters occur
    assert filter_by_length(m, 1) == set()
    assert filter_by_length(compute_maws_oracle("abaabab", "ab"), 1) == set()
    with pytest.raises(SequenceInputError):
        filter_by_length(m, 0)


def test_maw_set_carries_metadata():
    m = compute_maws("ACGT", "ACGT", source_id="s1")
    assert m.source_id == "s1"
    assert m.antifactorial
    assert str(m.alphabet) == "ACGT"


def test_oracle_equivalence_random():
    rng = random.Random(7)
    for _ in range(300):
        sigma = "abcd"[:rng.choice([2, 3, 4])]
        v = "".join(rng.choice(sigma) for _ in range(rng.randint(0, 30)))
        assert compute_maws(v, sigma) == compute_maws_oracle(v, sigma), v


@st.composite
def word_and_alphabet(draw, max_size=14):
    sigma = draw(st.sampled_from(["ab", "abc", "abcd"]))
    return draw(st.text(alphabet=sigma, max_size=max_size)), sigma


@given(word_and_alphabet(max_size=30))
def test_maws_match_oracle(case):
    v, sigma = case
    assert compute_maws(v, sigma) == compute_maws_oracle(v, sigma)


@given(word_and_alphabet(max_size=30))
def test_maws_antifactorial_and_bounded(case):
    v, sigma = case
    m = compute_maws(v, sigma)
    assert is_antifactorial(m)
    assert len(m) <= len(sigma) * len(v) + len(sigma)
    assert all(len(w) <= len(v) + 1 for w in m)
    for a in set(sigma) - set(v):
        assert a in m


def _all_words(sigma, max_len):
    layer = [""]
    yield ""
    for _ in range(max_len):
        layer = [w + a for w in layer for a in sigma]
        yield from layer


@settings(max_examples=60)
@given(word_and_alphabet(max_size=7))
def test_duality_factors_avoid_maws(case):
    v, sigma = case
    m = compute_maws(v, sigma)
    for u in _all_words(sigma, len(v) + 1):
        has_maw = any(w in u for w in m)
        assert (u in v) == (not has_maw), u
