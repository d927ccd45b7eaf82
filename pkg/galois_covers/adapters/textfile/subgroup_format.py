"""
Subgroup files.

Either generating words, one per line, in the presentation word syntax:

    generators
    a^3
    bAB

or an explicit coset table, one row per coset giving the image coset under
g0, g0^-1, g1, g1^-1, ...:

    table 2
    1 1
    0 0
"""

from galois_covers.adapters.textfile.presentation_format import (
    parse_word_text,
    serialize_word,
)
from galois_covers.domain.coset import CosetTable
from galois_covers.domain.exceptions import ParseError
from galois_covers.domain.presentation import Presentation
from galois_covers.domain.words import DEFAULT_MAX_WORD_LENGTH, Word
from galois_covers.ports.repositories.subgroup_repo import SubgroupSpec


def parse_subgroup_text(
    text: str, p: Presentation, max_length: int = DEFAULT_MAX_WORD_LENGTH
) -> SubgroupSpec:
    """
    Raises:
        ParseError: unknown header, bad row width or count, or a bad word.
    """
    lines = [
        (number, raw.split("#", 1)[0].strip())
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, content) for number, content in lines if content]
    if not lines:
        raise ParseError("empty subgroup file")

    header_line, header = lines[0]
    fields = header.split()
    if fields == ["generators"]:
        words = tuple(
            parse_word_text(content, p.generator_names, max_length, number)
            for number, content in lines[1:]
        )
        return SubgroupSpec(generators=words)

    if fields[0] == "table" and len(fields) == 2:
        try:
            count = int(fields[1])
        except ValueError:
            raise ParseError(f"coset count must be an integer, got {fields[1]!r}", header_line) from None
        body = lines[1:]
        if len(body) != count:
            raise ParseError(f"expected {count} rows, got {len(body)}", header_line)
        width = 2 * p.generator_count
        rows: list[tuple[int, ...]] = []
        for number, content in body:
            try:
                row = tuple(int(token) for token in content.split())
            except ValueError:
                raise ParseError(f"row entries must be integers: {content!r}", number) from None
            if len(row) != width:
                raise ParseError(f"expected {width} entries, got {len(row)}", number)
            rows.append(row)
        return SubgroupSpec(rows=tuple(rows))

    raise ParseError("expected 'generators' or 'table <coset_count>'", header_line)


def serialize_generators(words: tuple[Word, ...] | list[Word], p: Presentation) -> str:
    lines = ["generators"]
    lines.extend(serialize_word(w, p.generator_names) for w in words)
    return "\n".join(lines) + "\n"


def serialize_table(t: CosetTable) -> str:
    lines = [f"table {t.coset_count}"]
    lines.extend(" ".join(str(d) for d in row) for row in t.rows)
    return "\n".join(lines) + "\n"
