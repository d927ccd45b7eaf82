from abc import ABC, abstractmethod

from galois_covers.domain.presentation import Presentation


class PresentationRepository(ABC):
    """
    Outbound port: resolves a reference (inline text, file path or catalog
    name) to a presentation.
    """

    @abstractmethod
    def load(self, ref: str) -> Presentation:
        """Load a presentation; relators come back freely reduced."""
        ...
