"""
Outbound adapters implementing the repository ports over text files.

A reference starting with ``@`` resolves through the catalog instead of the
filesystem; a presentation reference starting with ``<`` is inline text.
"""

from pathlib import Path

from galois_covers.adapters.textfile.complex_format import parse_complex_text
from galois_covers.adapters.textfile.presentation_format import (
    parse_presentation_text,
)
from galois_covers.adapters.textfile.projection_format import parse_projection_text
from galois_covers.adapters.textfile.subgroup_format import parse_subgroup_text
from galois_covers.config.logging import get_logger
from galois_covers.domain.catalog import Catalog, CatalogKind
from galois_covers.domain.complex import TwoComplex, fundamental_group_presentation
from galois_covers.domain.cover import Projection
from galois_covers.domain.exceptions import ParseError, ResourceNotFoundError
from galois_covers.domain.presentation import Presentation
from galois_covers.domain.words import DEFAULT_MAX_WORD_LENGTH
from galois_covers.ports.repositories.complex_repo import ComplexRepository
from galois_covers.ports.repositories.presentation_repo import (
    PresentationRepository,
)
from galois_covers.ports.repositories.projection_repo import ProjectionRepository
from galois_covers.ports.repositories.subgroup_repo import (
    SubgroupRepository,
    SubgroupSpec,
)

logger = get_logger(__name__)

TRIVIAL_SUBGROUP_REF = "@trivial"


def read_text_file(ref: str, resource_type: str) -> str:
    """
    Raises:
        ResourceNotFoundError: no readable file at ``ref``.
        ParseError: the file is not UTF-8 text.
    """
    path = Path(ref)
    if not path.is_file():
        raise ResourceNotFoundError(resource_type, ref)
    logger.debug(f"Reading {resource_type} from {path}")
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{resource_type} '{ref}' is not UTF-8 text: {e.reason}") from e
    except OSError as e:
        raise ResourceNotFoundError(resource_type, ref) from e


class TextFileComplexRepository(ComplexRepository):
    """
    Outbound adapter:
    Implements the ComplexRepository port over complex files and the catalog.
    """

    def load(self, ref: str) -> TwoComplex:
        if ref.startswith("@"):
            return Catalog.complex(ref[1:])
        return parse_complex_text(read_text_file(ref, "complex file"))


class TextFilePresentationRepository(PresentationRepository):
    """
    Outbound adapter:
    Implements the PresentationRepository port. ``@name`` of a catalog complex
    gives the presentation of its fundamental group.
    """

    def __init__(self, max_word_length: int = DEFAULT_MAX_WORD_LENGTH) -> None:
        self.max_word_length = max_word_length

    def load(self, ref: str) -> Presentation:
        if ref.startswith("@"):
            found = Catalog.get_by_name(ref[1:])
            if found is not None and found[0].kind is CatalogKind.COMPLEX:
                return fundamental_group_presentation(Catalog.complex(ref[1:])).presentation
            return Catalog.presentation(ref[1:])
        if ref.lstrip().startswith("<"):
            return parse_presentation_text(ref, self.max_word_length)
        return parse_presentation_text(
            read_text_file(ref, "presentation file"), self.max_word_length
        )


class TextFileSubgroupRepository(SubgroupRepository):
    """
    Outbound adapter:
    Implements the SubgroupRepository port over subgroup files. ``@trivial``
    names the trivial subgroup.
    """

    def __init__(self, max_word_length: int = DEFAULT_MAX_WORD_LENGTH) -> None:
        self.max_word_length = max_word_length

    def load(self, ref: str, presentation: Presentation) -> SubgroupSpec:
        if ref == TRIVIAL_SUBGROUP_REF:
            return SubgroupSpec(generators=())
        if ref.startswith("@"):
            raise ResourceNotFoundError("subgroup", ref[1:])
        return parse_subgroup_text(
            read_text_file(ref, "subgroup file"), presentation, self.max_word_length
        )


class TextFileProjectionRepository(ProjectionRepository):
    """
    Outbound adapter:
    Implements the ProjectionRepository port over projection files.
    """

    def load(self, ref: str) -> Projection:
        return parse_projection_text(read_text_file(ref, "projection file"))
