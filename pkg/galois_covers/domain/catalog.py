"""
Domain-level catalog of named complexes and presentations.

Every entry can be referenced from the command line as ``@name``. Parametric
entries take a positive integer suffix: ``@cyclic5``, ``@z12``, ``@free3``.
"""

import re
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from galois_covers.domain.complex import (
    TwoComplex,
    make_complex,
    presentation_complex,
    step,
)
from galois_covers.domain.dodecahedral import homology_sphere
from galois_covers.domain.exceptions import InputError, ResourceNotFoundError
from galois_covers.domain.presentation import (
    Presentation,
    default_names,
    make_presentation,
)

A, A_INV, B, B_INV, C, C_INV = range(6)


class CatalogKind(Enum):
    """What a catalog entry builds."""

    COMPLEX = "complex"
    PRESENTATION = "presentation"


def circle() -> TwoComplex:
    return make_complex(1, [(0, 0)], name="circle")


def wedge_of_circles() -> TwoComplex:
    return make_complex(1, [(0, 0), (0, 0)], name="wedge2")


def torus() -> TwoComplex:
    """One vertex, edges a and b, face a b a^-1 b^-1."""
    return make_complex(
        1,
        [(0, 0), (0, 0)],
        [[step(0), step(1), step(0, -1), step(1, -1)]],
        name="torus",
    )


def klein_bottle() -> TwoComplex:
    """One vertex, edges a and b, face a b a^-1 b."""
    return make_complex(
        1,
        [(0, 0), (0, 0)],
        [[step(0), step(1), step(0, -1), step(1)]],
        name="klein",
    )


def two_circles() -> TwoComplex:
    """Disjoint union of two circles; only the first is seen from the basepoint."""
    return make_complex(2, [(0, 0), (1, 1)], name="two-circles")


def hypercubical() -> TwoComplex:
    """
    The cube with opposite faces identified: vertices a, b; edges w, x, y, z,
    all from a to b; faces z y^-1 x w^-1, y x^-1 z w^-1, w y^-1 z x^-1.
    """
    w, x, y, z = range(4)
    return make_complex(
        2,
        [(0, 1)] * 4,
        [
            [step(z), step(y, -1), step(x), step(w, -1)],
            [step(y), step(x, -1), step(z), step(w, -1)],
            [step(w), step(y, -1), step(z), step(x, -1)],
        ],
        cell3_count=1,
        name="hypercubical",
    )


def binary_icosahedral() -> Presentation:
    """<r s t | r^2 = s^3 = t^5 = rst>, written with relators r^2 (rst)^-1 etc."""
    rst_inverse = [C_INV, B_INV, A_INV]
    return make_presentation(
        ("r", "s", "t"),
        [[A] * 2 + rst_inverse, [B] * 3 + rst_inverse, [C] * 5 + rst_inverse],
    )


def quaternion() -> Presentation:
    """<a b | a^4, a^2 b^-2, b a b^-1 a>"""
    return make_presentation(
        ("a", "b"),
        [[A] * 4, [A, A, B_INV, B_INV], [B, A, B_INV, A]],
    )


def cyclic_group(n: int) -> Presentation:
    if n < 1:
        raise InputError(f"Cyclic order must be positive, got {n}", field="n")
    return make_presentation(("a",), [[A] * n])


def free_group(rank: int) -> Presentation:
    if rank < 0:
        raise InputError(f"Rank must be nonnegative, got {rank}", field="rank")
    return make_presentation(default_names(rank), [])


def cyclic_complex(n: int) -> TwoComplex:
    return presentation_complex(cyclic_group(n), name=f"cyclic{n}")


@dataclass(frozen=True)
class CatalogEntry:
    """
    Immutable catalog entry.
    Parametric entries are built from an integer suffix of the name.
    """

    name: str
    kind: CatalogKind
    description: str
    builder: Callable[..., TwoComplex | Presentation]
    parametric: bool = False

    def build(self, parameter: int | None = None) -> TwoComplex | Presentation:
        if self.parametric:
            if parameter is None:
                raise InputError(f"{self.name} needs an integer suffix", field="name")
            return self.builder(parameter)
        return self.builder()


class Catalog:
    """
    Registry of named objects.
    This is the single source of truth for what ``@name`` arguments resolve to.
    """

    # Complexes
    CIRCLE = CatalogEntry(
        "circle", CatalogKind.COMPLEX, "One vertex, one loop; pi1 = Z", circle
    )
    WEDGE2 = CatalogEntry(
        "wedge2",
        CatalogKind.COMPLEX,
        "Wedge of two circles; pi1 free of rank 2",
        wedge_of_circles,
    )
    TORUS = CatalogEntry("torus", CatalogKind.COMPLEX, "Torus; pi1 = Z^2", torus)
    KLEIN = CatalogEntry(
        "klein", CatalogKind.COMPLEX, "Klein bottle", klein_bottle
    )
    CYCLIC = CatalogEntry(
        "cyclic",
        CatalogKind.COMPLEX,
        "Presentation complex of <a | a^n>",
        cyclic_complex,
        parametric=True,
    )
    HYPERCUBICAL = CatalogEntry(
        "hypercubical",
        CatalogKind.COMPLEX,
        "Cube with opposite faces glued; pi1 = quaternion group",
        hypercubical,
    )
    DODECAHEDRAL = CatalogEntry(
        "dodecahedral",
        CatalogKind.COMPLEX,
        "Dodecahedral homology sphere; pi1 of order 120",
        homology_sphere,
    )
    TWO_CIRCLES = CatalogEntry(
        "two-circles",
        CatalogKind.COMPLEX,
        "Two disjoint circles",
        two_circles,
    )

    # Presentations
    BINARY_ICOSAHEDRAL = CatalogEntry(
        "binary-icosahedral",
        CatalogKind.PRESENTATION,
        "<r s t | r^2 = s^3 = t^5 = rst>, order 120",
        binary_icosahedral,
    )
    QUATERNION = CatalogEntry(
        "quaternion", CatalogKind.PRESENTATION, "Quaternion group Q8", quaternion
    )
    Z = CatalogEntry(
        "z", CatalogKind.PRESENTATION, "Cyclic group Z_n", cyclic_group, parametric=True
    )
    FREE = CatalogEntry(
        "free", CatalogKind.PRESENTATION, "Free group of rank r", free_group, parametric=True
    )

    @classmethod
    def get_all(cls) -> list[CatalogEntry]:
        """Get all catalog entries."""
        return [
            cls.CIRCLE,
            cls.WEDGE2,
            cls.TORUS,
            cls.KLEIN,
            cls.CYCLIC,
            cls.HYPERCUBICAL,
            cls.DODECAHEDRAL,
            cls.TWO_CIRCLES,
            cls.BINARY_ICOSAHEDRAL,
            cls.QUATERNION,
            cls.Z,
            cls.FREE,
        ]

    @classmethod
    def get_by_name(cls, name: str) -> tuple[CatalogEntry, int | None] | None:
        """Get an entry and its integer suffix (None for plain entries)."""
        for entry in cls.get_all():
            if not entry.parametric and entry.name == name:
                return entry, None
        match = re.fullmatch(r"([a-z]+)(\d+)", name)
        if match:
            for entry in cls.get_all():
                if entry.parametric and entry.name == match.group(1):
                    return entry, int(match.group(2))
        return None

    @classmethod
    def exists(cls, name: str) -> bool:
        return cls.get_by_name(name) is not None

    @classmethod
    def complex(cls, name: str) -> TwoComplex:
        """
        Raises:
            ResourceNotFoundError: no complex of that name.
        """
        found = cls.get_by_name(name)
        if found is None or found[0].kind is not CatalogKind.COMPLEX:
            raise ResourceNotFoundError("complex", name)
        result = found[0].build(found[1])
        assert isinstance(result, TwoComplex)
        return result

    @classmethod
    def presentation(cls, name: str) -> Presentation:
        """
        Raises:
            ResourceNotFoundError: no presentation of that name.
        """
        found = cls.get_by_name(name)
        if found is None or found[0].kind is not CatalogKind.PRESENTATION:
            raise ResourceNotFoundError("presentation", name)
        result = found[0].build(found[1])
        assert isinstance(result, Presentation)
        return result
