"""Tests for the presentation text format."""

import pytest

from galois_covers.adapters.textfile.presentation_format import (
    parse_presentation_text,
    parse_word_text,
    serialize_presentation,
    serialize_word,
)
from galois_covers.domain.catalog import binary_icosahedral, hypercubical, quaternion
from galois_covers.domain.complex import fundamental_group_presentation
from galois_covers.domain.exceptions import ParseError, UnsupportedInputError
from galois_covers.domain.presentation import make_presentation


def test_parse_cyclic_group():
    """Test that a^5 expands to five letters."""
    p = parse_presentation_text("<a | a^5>")

    assert p.generator_names == ("a",)
    assert [r.letters for r in p.relators] == [(0, 0, 0, 0, 0)]


def test_parse_binary_icosahedral():
    """Test that the text form matches the catalog presentation."""
    p = parse_presentation_text("<r s t | r^2TSR, s^3TSR, t^5TSR>")

    assert p == binary_icosahedral()


def test_uppercase_is_inverse_and_whitespace_ignored():
    """Test a b A B written with spaces."""
    w = parse_word_text("a b A B", ("a", "b"))

    assert w.letters == (0, 2, 1, 3)


def test_power_repeats_only_the_last_letter():
    """Test that ab^2 is a b b."""
    assert parse_word_text("ab^2", ("a", "b")).letters == (0, 2, 2)


def test_relators_are_freely_reduced():
    """Test that a A disappears from a relator list."""
    assert parse_presentation_text("<a b | aA, abB>").relators == (
        parse_word_text("a", ("a", "b")),
    )


def test_no_relators():
    """Test a free group presentation."""
    assert parse_presentation_text("<a b | >").relators == ()


@pytest.mark.parametrize(
    "text,message",
    [
        ("<a | b>", "not a declared generator"),
        ("<a | a^>", "malformed"),
        ("<a | ^2>", "malformed"),
        ("<a | a1>", "unknown letter"),
        ("< | a>", "empty generator list"),
        ("<a a | a>", "duplicate"),
        ("<ab | a>", "not a lowercase letter"),
        ("a | a", "expected"),
        ("<a | a,, a>", "empty relator"),
    ],
)
def test_parse_errors(text, message):
    """Test that malformed presentations raise ParseError."""
    with pytest.raises(ParseError, match=message):
        parse_presentation_text(text)


def test_word_length_cap():
    """Test that an exponent cannot exceed the length cap."""
    with pytest.raises(ParseError, match="exceeds"):
        parse_word_text("a^100", ("a",), max_length=10)


def test_serialize_uses_powers():
    """Test that runs are written with ^k."""
    names = ("a", "b")

    assert serialize_word(parse_word_text("aabBBBa", names), names) == "a^2B^2a"


def test_serialize_binary_icosahedral():
    """Test the canonical text of the catalog presentation."""
    assert serialize_presentation(binary_icosahedral()) == "<r s t | r^2TSR, s^3TSR, t^4SR>"


@pytest.mark.parametrize(
    "p",
    [
        binary_icosahedral(),
        quaternion(),
        fundamental_group_presentation(hypercubical()).presentation,
    ],
)
def test_serialized_text_parses_back(p):
    """Test that serialized presentations parse to equal values."""
    assert parse_presentation_text(serialize_presentation(p)) == p


def test_serialize_rejects_long_names():
    """Test that multi-letter generator names have no text form."""
    with pytest.raises(UnsupportedInputError):
        serialize_presentation(make_presentation(("x1",), []))
