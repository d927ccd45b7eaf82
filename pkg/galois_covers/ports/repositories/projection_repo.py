from abc import ABC, abstractmethod

from galois_covers.domain.cover import Projection


class ProjectionRepository(ABC):
    """
    Outbound port: the application depends on this interface.
    Adapters read the cell maps of a cover written earlier.
    """

    @abstractmethod
    def load(self, ref: str) -> Projection:
        """
        Load the cell maps of a cover.

        Raises:
            ResourceNotFoundError: the reference names nothing.
            ParseError: the content is invalid.
        """
        ...
