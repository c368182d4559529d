from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import as_strings, morphisms, napply, ncompose, npower, triangular_morphisms, word_texts
from trimorph.morphisms import (
    BinaryMorphism,
    BOnly,
    Core,
    IDENTITY,
    NotUpperTriangular,
    TriangularForm,
    apply,
    compose,
    format_morphism,
    is_nonsingular,
    is_special_pair,
    matrix,
    parse_morphism,
    power,
    to_triangular,
)
from trimorph.words import CountOverflow, ParseError, Word


def m(text: str) -> BinaryMorphism:
    return parse_morphism(text)


def test_apply_examples():
    g = m("a=aa,b=ab")
    assert apply(g, Word.parse("ba")).to_text() == "abaa"
    assert apply(m("a=eps,b=b"), Word.parse("aba")).to_text() == "b"


def test_compose_is_right_to_left():
    g1 = m("a=aa,b=ab")
    g2 = m("a=a,b=ba")
    assert compose(g1, g2).image_b.to_text() == "abaa"
    assert compose(g2, g1).image_b.to_text() == "aba"


def test_power_examples():
    g = m("a=a,b=bab")
    assert power(g, 0) == IDENTITY
    assert power(g, 2).image_b.to_text() == "bababab"


def test_matrix_examples():
    assert matrix(m("a=aa,b=ab")).rows == ((2, 1), (0, 1))
    assert matrix(m("a=eps,b=ab")).rows == ((0, 1), (0, 1))
    assert matrix(m("a=ba,b=b")).rows == ((1, 0), (1, 1))


def test_matrix_det_sign():
    assert matrix(m("a=ba,b=b")).det() == 1
    assert matrix(m("a=b,b=a")).det() == -1
    assert matrix(m("a=eps,b=ab")).det() == 0


def test_nonsingular_examples():
    assert is_nonsingular(m("a=a,b=bab"))
    assert not is_nonsingular(m("a=aa,b=aaa"))
    assert not is_nonsingular(m("a=eps,b=ab"))


def test_to_triangular_examples():
    form = to_triangular(m("a=aa,b=abaaba"))
    assert form == TriangularForm(2, Core(1, (2,), 1))
    assert form.bpart.p == 2
    assert to_triangular(m("a=eps,b=aaa")) == TriangularForm(0, BOnly(3))
    with pytest.raises(NotUpperTriangular):
        to_triangular(m("a=ab,b=b"))


def test_special_pair_examples():
    assert is_special_pair(m("a=a,b=aba"), m("a=aa,b=b"))
    assert not is_special_pair(m("a=a,b=aba"), m("a=a,b=b"))
    assert not is_special_pair(m("a=a,b=bb"), m("a=aa,b=b"))


def test_parse_morphism_accepts_whitespace():
    assert m(" a = ab , b = eps ") == BinaryMorphism(Word.parse("ab"), Word())


def test_parse_morphism_rejects_malformed():
    for bad in ("a=ab", "b=a,a=b", "a=abc,b=b", "a=,b=b", "x=a,b=b"):
        with pytest.raises(ParseError):
            m(bad)


def test_format_roundtrip_examples():
    for text in ("a=aa,b=ab", "a=eps,b=eps", "a=a,b=bab"):
        assert format_morphism(m(text)) == text


def test_power_overflow():
    g = BinaryMorphism(Word.single("a", 2**33), Word.parse("b"))
    with pytest.raises(CountOverflow):
        power(g, 3)


@given(morphisms(), word_texts(14))
def test_apply_matches_string_oracle(g, t):
    ga, gb = as_strings(g)
    assert apply(g, Word.parse(t) if t else Word()).to_text() == (napply(ga, gb, t) or "eps")


@given(morphisms(6), morphisms(6))
def test_compose_matches_string_oracle(g1, g2):
    expected = ncompose(as_strings(g1), as_strings(g2))
    assert as_strings(compose(g1, g2)) == expected


@given(morphisms(5), st.integers(0, 3))
def test_power_matches_string_oracle(g, n):
    assert as_strings(power(g, n)) == npower(as_strings(g), n)


@given(morphisms(6), morphisms(6))
def test_matrix_is_multiplicative(g1, g2):
    assert matrix(compose(g1, g2)) == matrix(g1) @ matrix(g2)


@given(morphisms(5), st.integers(0, 2), st.integers(0, 2))
def test_power_addition(g, i, j):
    assert compose(power(g, i), power(g, j)) == power(g, i + j)


@given(triangular_morphisms())
def test_triangular_roundtrip(g):
    form = to_triangular(g)
    assert form.to_morphism() == g
    assert form.is_nonsingular() == is_nonsingular(g)


@given(triangular_morphisms(max_s=2, max_image=4), st.integers(1, 4))
def test_b_count_grows_geometrically(g, n):
    form = to_triangular(g)
    if not form.is_nonsingular():
        return
    p = form.b_count
    assert power(g, n).image_b.occ("b") == p**n


@given(morphisms())
def test_format_parse_roundtrip(g):
    assert parse_morphism(format_morphism(g)) == g
