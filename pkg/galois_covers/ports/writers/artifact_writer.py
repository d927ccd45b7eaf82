from abc import ABC, abstractmethod


class ArtifactWriter(ABC):
    """
    Outbound port for results.
    Results go to the standard output stream or to files, never to the log.
    """

    @abstractmethod
    def emit(self, text: str) -> None:
        """Write result text to the standard output stream."""
        ...

    @abstractmethod
    def write(self, path: str, text: str) -> None:
        """
        Write an artifact file, replacing any previous content.

        Raises:
            InputError: the path cannot be written.
        """
        ...
