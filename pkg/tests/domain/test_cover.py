"""Tests for covers and the subgroup/cover correspondence."""

import pytest

from galois_covers.domain.catalog import (
    circle,
    cyclic_complex,
    hypercubical,
    klein_bottle,
    torus,
    two_circles,
    wedge_of_circles,
)
from galois_covers.domain.complex import (
    euler_characteristic,
    fundamental_group_presentation,
    is_connected,
    make_complex,
    presentation_complex,
)
from galois_covers.domain.coset import todd_coxeter
from galois_covers.domain.cover import (
    Projection,
    build_cover,
    cayley_complex,
    deck_group_order,
    deck_transformations,
    fiber_over,
    galois_roundtrip_check,
    monodromy_action,
    projection_violations,
    sheet_count,
    subgroup_of_cover,
    subgroup_of_projection,
    universal_cover,
    validate_cover,
)
from galois_covers.domain.exceptions import (
    AlphabetMismatchError,
    ComplexError,
    InputError,
    ResourceExhaustedError,
)
from galois_covers.domain.lowindex import low_index_subgroups
from galois_covers.domain.presentation import make_presentation
from galois_covers.domain.words import reduce_word


def _subgroups(x, max_index):
    return low_index_subgroups(fundamental_group_presentation(x).presentation, max_index)


@pytest.fixture
def s3_complex():
    """Presentation complex of <a b | a^2, b^3, abab>."""
    p = make_presentation(("a", "b"), [[0, 0], [2, 2, 2], [0, 2, 0, 2]])
    return presentation_complex(p, name="s3")


def test_circle_covers_are_cycles():
    """Test that the n-sheeted cover of the circle is an n-cycle."""
    for table in _subgroups(circle(), 6):
        cover = build_cover(circle(), table)
        n = table.coset_count

        assert cover.total.vertex_count == n
        assert cover.total.edge_count == n
        assert is_connected(cover.total)
        assert sorted(src for src, _ in cover.total.edges) == list(range(n))
        assert fiber_over(cover, 0) == list(range(n))


def test_three_sheeted_circle_monodromy():
    """Test that the 3-sheeted circle cover has a 3-cycle as monodromy."""
    table = _subgroups(circle(), 3)[-1]
    cover = build_cover(circle(), table)
    action = monodromy_action(cover)

    assert action == table
    a = action.permutation(0)
    assert sorted(a) == [0, 1, 2]
    assert a[a[0]] != 0 and a[a[a[0]]] == 0


def test_double_covers_of_the_torus():
    """Test cell counts and Euler characteristic of each index-2 cover."""
    tables = [t for t in _subgroups(torus(), 2) if t.coset_count == 2]

    assert len(tables) == 3
    for table in tables:
        cover = build_cover(torus(), table)

        assert cover.total.vertex_count == 2
        assert cover.total.edge_count == 4
        assert cover.total.face_count == 2
        assert euler_characteristic(cover.total) == 0
        assert sheet_count(cover) == 2
        assert validate_cover(cover) == []
        assert deck_group_order(cover) == 2


def test_identity_cover_is_the_base():
    """Test that the index-1 subgroup gives back the base complex."""
    table = _subgroups(torus(), 1)[0]
    cover = build_cover(torus(), table)

    assert cover.total == torus()
    assert cover.total.name == "torus~1"


def test_universal_cover_of_cyclic_complex():
    """Test 5 vertices, 5 edges and 5 faces over <a | a^5>."""
    cover = universal_cover(cyclic_complex(5))

    assert (cover.total.vertex_count, cover.total.edge_count, cover.total.face_count) == (5, 5, 5)
    assert deck_group_order(cover) == 5
    assert subgroup_of_cover(cover).coset_count == 5


def test_universal_cover_of_hypercubical():
    """Test the 8-sheeted universal cover with deck group of order 8."""
    x = hypercubical()
    cover = universal_cover(x)
    trivial = todd_coxeter(fundamental_group_presentation(x).presentation, [])

    assert cover.sheets == 8
    assert cover.total.vertex_count == 16
    assert cover.total.cell3_count == 8
    assert deck_group_order(cover) == 8
    assert subgroup_of_cover(cover) == trivial
    assert validate_cover(cover) == []


def test_universal_cover_of_circle_runs_out_of_cosets():
    """Test that an infinite group stops at the coset cap."""
    with pytest.raises(ResourceExhaustedError):
        universal_cover(circle(), max_cosets=1000)


def test_cayley_complex_has_one_vertex_per_element():
    """Test the Cayley complex of Z/4."""
    cover = cayley_complex(make_presentation(("a",), [[0] * 4]))

    assert cover.total.vertex_count == 4
    assert cover.total.face_count == 4


def test_non_normal_subgroup_has_trivial_deck_group(s3_complex):
    """Test that <a> in S3 gives a 3-sheeted cover with one deck transformation."""
    table = todd_coxeter(
        fundamental_group_presentation(s3_complex).presentation, [reduce_word([0], 2)]
    )
    cover = build_cover(s3_complex, table)

    assert cover.sheets == 3
    assert deck_group_order(cover) == 1


def test_normal_subgroup_deck_group_is_the_quotient(s3_complex):
    """Test that <b> in S3 is normal, so both sheets carry a deck transformation."""
    table = todd_coxeter(
        fundamental_group_presentation(s3_complex).presentation, [reduce_word([2], 2)]
    )
    cover = build_cover(s3_complex, table)

    assert cover.sheets == 2
    assert deck_transformations(cover) == [0, 1]
    assert deck_group_order(cover) == 2


def test_build_cover_rejects_other_alphabet():
    """Test a two-generator table over the circle."""
    table = _subgroups(torus(), 2)[1]

    with pytest.raises(AlphabetMismatchError):
        build_cover(circle(), table)


def test_build_cover_rejects_non_action():
    """Test that a 3-cycle does not satisfy a^5."""
    table = _subgroups(circle(), 3)[-1]

    with pytest.raises(InputError, match="relator 0"):
        build_cover(cyclic_complex(5), table)


def test_build_cover_requires_connected_complex():
    """Test that a disconnected base is refused."""
    table = _subgroups(circle(), 1)[0]

    with pytest.raises(ComplexError, match="not connected"):
        build_cover(two_circles(), table)


@pytest.mark.parametrize(
    "x,max_index,expected",
    [
        (circle(), 6, 6),
        (torus(), 6, 33),
        (wedge_of_circles(), 4, 88),
        (hypercubical(), 8, 6),
    ],
    ids=["circle", "torus", "wedge2", "hypercubical"],
)
def test_round_trips(x, max_index, expected):
    """Test both round trips for every subgroup up to the index."""
    report = galois_roundtrip_check(x, max_index)

    assert len(report.results) == expected
    assert report.passed
    assert report.failures() == []


def test_round_trips_on_klein_bottle():
    """Test every subgroup of the Klein bottle group up to index 6."""
    assert galois_roundtrip_check(klein_bottle(), 6).passed


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trips_on_cyclic_complexes(n):
    """Test Z/n presentation complexes: one subgroup per divisor of n up to 6."""
    report = galois_roundtrip_check(cyclic_complex(n), 6)

    assert len(report.results) == sum(1 for d in range(1, 7) if n % d == 0)
    assert report.passed


@pytest.mark.slow
def test_round_trips_on_wedge_of_two_circles():
    """Test all 3996 subgroups of F2 of index at most 6."""
    report = galois_roundtrip_check(wedge_of_circles(), 6, workers=2)

    assert len(report.results) == 1 + 3 + 13 + 71 + 461 + 3447
    assert report.passed


def test_parallel_round_trips_keep_order():
    """Test that workers produce the same report."""
    assert galois_roundtrip_check(torus(), 3, workers=2) == galois_roundtrip_check(
        torus(), 3
    )


def test_subgroup_of_projection_recovers_each_torus_subgroup():
    """Test that the cell maps alone determine the subgroup of a cover."""
    for table in _subgroups(torus(), 3):
        cover = build_cover(torus(), table)

        assert subgroup_of_projection(torus(), cover.total, cover.projection) == table


def test_projection_swapping_edge_classes_breaks_faces():
    """Test that exchanging the torus edges under a double cover is caught."""
    cover = build_cover(torus(), _subgroups(torus(), 2)[1])
    swapped = Projection(
        cover.vertex_map, tuple(1 - e for e in cover.edge_map), cover.face_map
    )

    violations = projection_violations(torus(), cover.total, swapped)

    assert violations == [
        "total face 0 does not project onto its base face",
        "total face 1 does not project onto its base face",
    ]


def test_projection_must_be_a_local_bijection():
    """Test that two parallel edges do not cover the circle."""
    total = make_complex(2, [(0, 1), (0, 1)])

    violations = projection_violations(circle(), total, Projection((0, 0), (0, 0), ()))

    assert violations == [
        "total vertex 0 is not mapped bijectively near itself",
        "total vertex 1 is not mapped bijectively near itself",
    ]
    with pytest.raises(ComplexError, match="bijectively"):
        subgroup_of_projection(circle(), total, Projection((0, 0), (0, 0), ()))
