"""Tests for Cover Service."""

from unittest.mock import Mock

import pytest

from galois_covers.application.cover_service import CoverService
from galois_covers.domain.catalog import circle, cyclic_complex, torus, two_circles
from galois_covers.domain.cover import Projection, universal_cover
from galois_covers.domain.exceptions import ComplexError, ResourceExhaustedError
from galois_covers.domain.words import reduce_word
from galois_covers.ports.repositories.subgroup_repo import SubgroupSpec


@pytest.fixture
def mock_complex_repo():
    """Mock complex repository."""
    return Mock()


@pytest.fixture
def mock_subgroup_repo():
    """Mock subgroup repository."""
    return Mock()


@pytest.fixture
def mock_projection_repo():
    """Mock projection repository."""
    return Mock()


@pytest.fixture
def service(mock_complex_repo, mock_subgroup_repo, mock_projection_repo):
    """Create Cover Service with mocked dependencies."""
    return CoverService(
        mock_complex_repo, mock_subgroup_repo, mock_projection_repo, max_cosets=1000
    )


def test_fundamental_group(service, mock_complex_repo):
    """Test that pi1 of the torus has two generators and one relator."""
    mock_complex_repo.load.return_value = torus()

    result = service.fundamental_group("torus.complex")

    assert result.presentation.generator_count == 2
    assert len(result.presentation.relators) == 1
    mock_complex_repo.load.assert_called_once_with("torus.complex")


def test_cover_from_generators(service, mock_complex_repo, mock_subgroup_repo):
    """Test the 3-sheeted cover of the circle from the word a^3."""
    mock_complex_repo.load.return_value = circle()
    mock_subgroup_repo.load.return_value = SubgroupSpec(generators=(reduce_word([0] * 3, 1),))

    result = service.cover("@circle", "sub.txt")

    assert result.sheets == 3
    assert result.total.vertex_count == 3
    assert mock_subgroup_repo.load.call_args.args[0] == "sub.txt"


def test_universal_cover_exhausts_cap(service, mock_complex_repo):
    """Test that the circle has no finite universal cover."""
    mock_complex_repo.load.return_value = circle()

    with pytest.raises(ResourceExhaustedError):
        service.universal("@circle")


def test_deck_order_of_universal_cover(service, mock_complex_repo):
    """Test that the deck group of the universal cover is pi1."""
    mock_complex_repo.load.return_value = cyclic_complex(4)

    assert service.deck_order("@cyclic4") == 4


def test_deck_order_of_given_subgroup(service, mock_complex_repo, mock_subgroup_repo):
    """Test the deck group of the double cover of Z/4."""
    mock_complex_repo.load.return_value = cyclic_complex(4)
    mock_subgroup_repo.load.return_value = SubgroupSpec(generators=(reduce_word([0, 0], 1),))

    assert service.deck_order("@cyclic4", "sub.txt") == 2


def test_component(service, mock_complex_repo):
    """Test the basepoint component of two disjoint circles."""
    mock_complex_repo.load.return_value = two_circles()

    result = service.component("@two-circles")

    assert result.vertex_count == 1
    assert result.edge_count == 1


def test_verify_galois(service, mock_complex_repo):
    """Test the round trips on the torus up to index 3."""
    mock_complex_repo.load.return_value = torus()

    report = service.verify_galois("@torus", 3)

    assert report.passed
    assert len(report.results) == 8


def test_subgroup_of_files(service, mock_complex_repo, mock_projection_repo):
    """Test that a cover read back from its files gives its subgroup."""
    cover = universal_cover(cyclic_complex(4))
    mock_complex_repo.load.side_effect = [cyclic_complex(4), cover.total]
    mock_projection_repo.load.return_value = cover.projection

    result = service.subgroup_of_files("@cyclic4", "u.complex", "u.projection")

    assert result == cover.subgroup_table
    assert [c.args[0] for c in mock_complex_repo.load.call_args_list] == [
        "@cyclic4",
        "u.complex",
    ]
    mock_projection_repo.load.assert_called_once_with("u.projection")


def test_subgroup_of_files_rejects_a_non_cover(
    service, mock_complex_repo, mock_projection_repo
):
    """Test that a projection file for another total complex is refused."""
    cover = universal_cover(cyclic_complex(4))
    mock_complex_repo.load.side_effect = [cyclic_complex(4), cover.total]
    mock_projection_repo.load.return_value = Projection(
        cover.vertex_map[:-1], cover.edge_map, cover.face_map
    )

    with pytest.raises(ComplexError, match="vertex map has 3 entries, expected 4"):
        service.subgroup_of_files("@cyclic4", "u.complex", "u.projection")
