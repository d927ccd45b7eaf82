from abc import ABC, abstractmethod

from galois_covers.domain.complex import TwoComplex


class ComplexRepository(ABC):
    """
    Outbound port: the application depends on this interface.
    Adapters resolve a reference (file path or catalog name) to a complex.
    """

    @abstractmethod
    def load(self, ref: str) -> TwoComplex:
        """
        Load and validate a complex.

        Raises:
            ResourceNotFoundError: the reference names nothing.
            ParseError, ComplexError: the content is invalid.
        """
        ...
