from abc import ABC, abstractmethod
from dataclasses import dataclass

from galois_covers.domain.presentation import Presentation
from galois_covers.domain.words import Word


@dataclass(frozen=True)
class SubgroupSpec:
    """
    A subgroup as given by the user: generating words, or an explicit coset
    table (rows over g0, g0^-1, g1, g1^-1, ...). Exactly one is set.
    """

    generators: tuple[Word, ...] | None = None
    rows: tuple[tuple[int, ...], ...] | None = None


class SubgroupRepository(ABC):
    """Outbound port: loads a subgroup description over a known presentation."""

    @abstractmethod
    def load(self, ref: str, presentation: Presentation) -> SubgroupSpec:
        """
        Raises:
            ResourceNotFoundError: the reference names nothing.
            ParseError: the content is invalid or uses unknown letters.
        """
        ...
