"""Tests for the catalog of named objects."""

import pytest

from galois_covers.domain.catalog import Catalog, CatalogKind
from galois_covers.domain.complex import TwoComplex
from galois_covers.domain.coset import group_order
from galois_covers.domain.exceptions import InputError, ResourceNotFoundError


def test_names_are_unique():
    """Test that no two entries share a name."""
    names = [entry.name for entry in Catalog.get_all()]

    assert len(names) == len(set(names))


def test_get_by_name_with_suffix():
    """Test that a parametric name carries its integer."""
    entry, parameter = Catalog.get_by_name("cyclic5")

    assert entry is Catalog.CYCLIC
    assert parameter == 5


def test_get_by_name_plain_entry():
    """Test a name without suffix."""
    assert Catalog.get_by_name("two-circles") == (Catalog.TWO_CIRCLES, None)
    assert Catalog.get_by_name("nothing") is None
    assert not Catalog.exists("torus3")


def test_complex_lookup():
    """Test building a complex by name."""
    x = Catalog.complex("cyclic5")

    assert isinstance(x, TwoComplex)
    assert x.name == "cyclic5"
    assert x.face_count == 1


def test_presentation_lookup():
    """Test that catalog presentations have the advertised orders."""
    assert group_order(Catalog.presentation("binary-icosahedral")) == 120
    assert group_order(Catalog.presentation("quaternion")) == 8
    assert group_order(Catalog.presentation("z12")) == 12
    assert Catalog.presentation("free3").generator_count == 3


def test_kind_mismatch_is_not_found():
    """Test that a presentation name is not a complex."""
    with pytest.raises(ResourceNotFoundError, match="complex 'quaternion' not found"):
        Catalog.complex("quaternion")


def test_parametric_entry_needs_parameter():
    """Test building a parametric entry without its integer."""
    with pytest.raises(InputError):
        Catalog.Z.build()


def test_kinds():
    """Test that every entry is a complex or a presentation."""
    kinds = {entry.kind for entry in Catalog.get_all()}

    assert kinds == {CatalogKind.COMPLEX, CatalogKind.PRESENTATION}
