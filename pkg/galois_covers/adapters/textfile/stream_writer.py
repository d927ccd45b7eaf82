import sys
from pathlib import Path
from typing import TextIO

from galois_covers.config.logging import get_logger
from galois_covers.domain.exceptions import InputError
from galois_covers.ports.writers.artifact_writer import ArtifactWriter

logger = get_logger(__name__)


class StreamArtifactWriter(ArtifactWriter):
    """
    Outbound adapter:
    Results to a text stream (standard output by default), artifacts to files.
    """

    def __init__(self, stream: TextIO | None = None) -> None:
        self.stream = stream if stream is not None else sys.stdout

    def emit(self, text: str) -> None:
        self.stream.write(text if text.endswith("\n") else text + "\n")

    def write(self, path: str, text: str) -> None:
        """
        Raises:
            InputError: ``path`` cannot be created or written.
        """
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputError(
                f"cannot write output '{path}': {e.strerror or e}", field="output"
            ) from e
        logger.info(f"Wrote {target}")
