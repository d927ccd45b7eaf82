"""Tests for the complex file format."""

import pytest

from galois_covers.adapters.textfile.complex_format import (
    parse_complex_text,
    serialize_complex,
)
from galois_covers.domain.catalog import (
    circle,
    cyclic_complex,
    hypercubical,
    klein_bottle,
    torus,
)
from galois_covers.domain.complex import step
from galois_covers.domain.exceptions import ComplexError, ParseError

TORUS_TEXT = """\
complex torus
vertices 1
edge 0 0 0   # a
edge 1 0 0   # b
face 0 +0 +1 -0 -1
basepoint 0
"""


def test_parse_torus():
    """Test a commented torus file."""
    x = parse_complex_text(TORUS_TEXT)

    assert x == torus()
    assert x.name == "torus"
    assert x.faces == ((step(0), step(1), step(0, -1), step(1, -1)),)


def test_serialize_torus():
    """Test the canonical text of the catalog torus."""
    assert serialize_complex(torus()) == TORUS_TEXT.replace("   # a", "").replace(
        "   # b", ""
    )


def test_serialize_includes_three_cells():
    """Test that a nonzero 3-cell count is written."""
    assert "cell3 1\n" in serialize_complex(hypercubical())


@pytest.mark.parametrize(
    "x", [circle(), torus(), klein_bottle(), hypercubical(), cyclic_complex(3)]
)
def test_serialized_complex_parses_back(x):
    """Test that serialized complexes parse to equal values."""
    parsed = parse_complex_text(serialize_complex(x))

    assert parsed == x
    assert parsed.name == x.name


@pytest.mark.parametrize(
    "text,message",
    [
        ("vertices 1\nedge 1 0 0\nbasepoint 0\n", "line 2: edge id 1 out of order"),
        ("vertices 1\nedge 0 0 0\nface 0 0\nbasepoint 0\n", "line 3: signed edge"),
        ("vertices x\nbasepoint 0\n", "line 1: vertex count must be an integer"),
        ("vertices 1\nvertices 2\nbasepoint 0\n", "line 2: duplicate 'vertices'"),
        ("vertices 1\nloop 0\nbasepoint 0\n", "line 2: unknown directive"),
        ("vertices 1\n", "missing 'basepoint'"),
        ("basepoint 0\n", "missing 'vertices'"),
    ],
)
def test_parse_errors(text, message):
    """Test that malformed lines are reported with their number."""
    with pytest.raises(ParseError, match=message):
        parse_complex_text(text)


def test_invalid_complex_is_a_complex_error():
    """Test that a well-formed file describing an open face is rejected."""
    text = "vertices 2\nedge 0 0 1\nface 0 +0\nbasepoint 0\n"

    with pytest.raises(ComplexError, match="face 0 not closed"):
        parse_complex_text(text)
