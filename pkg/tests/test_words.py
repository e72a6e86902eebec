from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thompsonkit.errors import InvalidWord
from thompsonkit.words import (
    DyadicPoint,
    EPWord,
    canonical_dyadic,
    format_rational,
    head,
    phi,
    prepend,
    psi,
    shift,
    value,
)

bits = st.text(alphabet="01", max_size=14)
periods = st.text(alphabet="01", min_size=1, max_size=8)
epwords = st.builds(EPWord, bits, periods)
rationals = st.integers(min_value=1, max_value=500).flatmap(
    lambda d: st.builds(lambda n: Fraction(n, d), st.integers(min_value=0, max_value=d - 1))
)


@pytest.mark.parametrize("w, expected", [("101", Fraction(5, 8)), ("", 0), ("0011", Fraction(3, 16))])
def test_psi(w, expected):
    assert psi(w) == expected


@pytest.mark.parametrize(
    "theta, pre, per",
    [(Fraction(3, 4), "11", "0"), (Fraction(1, 3), "", "01"), (Fraction(0), "", "0")],
)
def test_phi(theta, pre, per):
    assert phi(theta) == EPWord(pre, per)
    assert (phi(theta).preperiod, phi(theta).period) == (pre, per)


def test_phi_rejects_outside_unit_interval():
    for bad in (Fraction(1), Fraction(-1, 3), Fraction(5, 4)):
        with pytest.raises(ValueError):
            phi(bad)


def test_phi_never_emits_one_tail():
    for den in range(1, 65):
        for num in range(den):
            assert phi(Fraction(num, den)).period != "1"


@pytest.mark.parametrize("w, expected", [("1010", "101"), ("000", ""), ("101", "101")])
def test_canonical_dyadic(w, expected):
    assert canonical_dyadic(w).word == expected
    assert canonical_dyadic(w) == canonical_dyadic(w + "0")


def test_head_examples():
    assert head(EPWord("", "01"), 5) == "01010"
    assert head(EPWord("1", "0"), 3) == "100"
    assert head(EPWord("11", "0"), 0) == ""


def test_shift_examples():
    assert shift(EPWord("", "01"), 1) == EPWord("", "10")
    assert shift(EPWord("11", "0"), 2) == EPWord("", "0")
    x = EPWord("110", "011")
    assert shift(x, 0) == x


def test_prepend_examples():
    assert prepend("0", EPWord("", "0")) == EPWord("", "0")
    assert prepend("1", EPWord("", "0")) == EPWord("1", "0")
    x = EPWord("01", "110")
    assert prepend("", x) == x


def test_canonical_form_is_syntactic():
    x = EPWord("0101", "0101")
    assert (x.preperiod, x.period) == ("", "01")
    assert EPWord("1", "01") == EPWord("", "10")
    assert EPWord("1", "0") != EPWord("0", "1")


def test_invalid_words_rejected():
    with pytest.raises(InvalidWord):
        EPWord("2", "0")
    with pytest.raises(InvalidWord):
        EPWord("1", "")
    with pytest.raises(InvalidWord):
        psi("10a")


def test_text_encoding_round_trip():
    for text in ["11(0)", "(01)", "10(011)", "(1)"]:
        assert str(EPWord.parse(text)) == text
    assert DyadicPoint.parse("101(0)") == DyadicPoint("101")
    with pytest.raises(InvalidWord):
        DyadicPoint.parse("(01)")
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(2)) == "2"


@given(rationals)
def test_phi_round_trip(theta):
    assert value(phi(theta)) == theta


@given(bits)
def test_psi_invariant_under_canonical_dyadic(w):
    assert psi(canonical_dyadic(w).word) == psi(w)


@given(epwords, st.integers(min_value=0, max_value=30))
def test_head_shift_prepend_coherent(x, n):
    assert prepend(head(x, n), shift(x, n)) == x
    assert len(head(x, n)) == n
    assert head(x, n + 5)[n:] == head(shift(x, n), 5)


@given(epwords, st.integers(min_value=0, max_value=40))
def test_canonical_epword_letters_agree_with_raw(x, n):
    raw = x.preperiod + x.period * 50
    assert head(x, n) == raw[:n]


@given(bits, periods)
def test_canonicalisation_idempotent(pre, per):
    x = EPWord(pre, per)
    assert EPWord(x.preperiod, x.period) == x
    assert (EPWord(x.preperiod, x.period).preperiod, EPWord(x.preperiod, x.period).period) == (x.preperiod, x.period)
    raw = pre + per * 60
    assert head(x, 60) == raw[:60]
    d = canonical_dyadic(pre)
    assert canonical_dyadic(d.word) == d
