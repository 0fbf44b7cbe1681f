from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorenzhole.errors import DomainError
from lorenzhole.seqcore import (
    Seq, canonicalize, concat, first_difference, is_self_admissible, lex_compare, metric_distance,
    periodic, primitive_root, seq, shift, shifts, substitute, substitute_word, symbol_at,
)

from conftest import nonempty_words, seqs, words


def expand(s: Seq, n: int) -> str:
    return s.prefix(n)


def test_canonicalize_examples():
    assert canonicalize("1", "00") == Seq("1", "0")
    assert canonicalize("", "0101") == Seq("", "01")
    assert canonicalize("10", "0110") == seq("(1001)")
    assert canonicalize("1", "01") == seq("(10)")


def test_canonicalize_is_minimal_by_brute_force():
    # every shorter description denoting the same sequence would be found here
    s = canonicalize("10", "0110")
    target = expand(s, 40)
    for total in range(1, len(s.pre) + len(s.per)):
        for lp in range(1, total + 1):
            pre_len = total - lp
            for bits in range(2 ** total):
                w = format(bits, f"0{total}b") if total else ""
                if (w[:pre_len] + w[pre_len:] * 40)[:40] == target:
                    pytest.fail(f"shorter description {w[:pre_len]}({w[pre_len:]})")


def test_parse_and_str_roundtrip():
    for text in ["10(011)", "(10011)", "1(0)", "0(1)"]:
        assert str(seq(text)) == text
    with pytest.raises(DomainError):
        seq("10(2)")
    with pytest.raises(DomainError):
        seq("101")
    with pytest.raises(DomainError):
        Seq("1", "00")


def test_symbol_at_and_shift_examples():
    assert symbol_at(seq("(10)"), 3) == 1
    assert symbol_at(seq("1(0)"), 1) == 1
    assert symbol_at(seq("10(011)"), 7) == 1
    assert shift(seq("(10011)"), 1) == seq("(00111)")
    assert shift(seq("1(0)"), 1) == seq("(0)")
    assert shift(seq("10(011)"), 2) == seq("(011)")


def test_compare_examples():
    assert lex_compare(seq("1(0)"), seq("(10)")) == -1
    assert lex_compare(seq("(100101)"), seq("(100)")) == 1
    assert lex_compare(seq("(10011)"), seq("(10011)")) == 0


def test_metric_examples():
    assert metric_distance(seq("(10)"), seq("(10)")) == 0
    assert metric_distance(seq("1(0)"), seq("(10)")) == Fraction(1, 4)
    assert metric_distance(seq("(1001)"), seq("10(011)")) == Fraction(1, 64)


def test_self_admissible_examples():
    assert is_self_admissible(seq("1(0)"), "upper")
    assert is_self_admissible(seq("(10011)"), "upper")
    assert not is_self_admissible(seq("(10100)"), "upper")
    with pytest.raises(DomainError):
        is_self_admissible(seq("(10)"), "sideways")


def test_substitute_examples():
    assert substitute(seq("(100)"), "10", "01") == seq("(100101)")
    assert substitute(seq("(01)"), "10", "01") == seq("(0110)")
    assert substitute(seq("(1)"), "1", "0") == seq("(1)")


@given(words, nonempty_words)
def test_canonicalize_idempotent_and_faithful(pre, per):
    s = canonicalize(pre, per)
    assert canonicalize(s.pre, s.per) == s
    assert expand(s, 60) == (pre + per * 60)[:60]


@given(seqs(), st.integers(0, 50), st.integers(0, 50))
def test_shift_composes(s, m, n):
    assert shift(shift(s, m), n) == shift(s, m + n)


@given(seqs(), seqs())
def test_compare_agrees_with_prefix_expansion(x, y):
    n = 2 * (max(len(x.pre), len(y.pre)) + lcm(len(x.per), len(y.per)))
    px, py = expand(x, n), expand(y, n)
    assert lex_compare(x, y) == (px > py) - (px < py)
    assert lex_compare(x, y) == -lex_compare(y, x)


@given(seqs(), seqs(), seqs())
def test_compare_transitive(x, y, z):
    if x <= y and y <= z:
        assert x <= z


@given(seqs(), seqs())
def test_first_difference_locates_disagreement(x, y):
    i = first_difference(x, y)
    if i is None:
        assert x == y
    else:
        assert expand(x, i - 1) == expand(y, i - 1)
        assert symbol_at(x, i) != symbol_at(y, i)


@given(seqs(first="1"))
def test_self_admissible_brute_force(s):
    n = 4 * (len(s.pre) + len(s.per))
    first = expand(shift(s, 1), 3 * n)
    brute = all(first <= expand(shift(s, k), 3 * n) for k in range(n))
    assert is_self_admissible(s, "upper") == brute


@given(seqs(), nonempty_words, nonempty_words)
def test_substitute_matches_prefix_expansion(s, w1, w0):
    assert expand(substitute(s, w1, w0), 200) == substitute_word(expand(s, 200), w1, w0)[:200]


@given(seqs(), nonempty_words, nonempty_words, st.integers(0, 10))
def test_substitute_commutes_with_word_aligned_shift(s, w1, w0, k):
    # shifting s by k symbols shifts the image by the length of the first k blocks
    head = substitute_word(expand(s, k), w1, w0)
    assert substitute(shift(s, k), w1, w0) == shift(substitute(s, w1, w0), len(head))


@given(nonempty_words)
def test_primitive_root(w):
    r = primitive_root(w)
    assert len(w) % len(r) == 0 and r * (len(w) // len(r)) == w
    assert periodic(w) == periodic(r)


def test_concat_and_shifts():
    assert concat("10", seq("(011)")) == seq("10(011)")
    assert len(shifts(seq("10(011)"))) == 5
