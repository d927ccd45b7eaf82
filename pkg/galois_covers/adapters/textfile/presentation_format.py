"""
Text syntax for presentations and words.

    <r s t | r^2TSR, s^3TSR, t^5TSR>

Generators are distinct lowercase letters; an uppercase letter is the inverse
of its lowercase generator; ``^k`` repeats the letter just before it k times.
Whitespace inside words is ignored.
"""

import re

from galois_covers.domain.exceptions import ParseError, UnsupportedInputError
from galois_covers.domain.presentation import (
    Presentation,
    is_single_letter_alphabet,
    make_presentation,
)
from galois_covers.domain.words import (
    DEFAULT_MAX_WORD_LENGTH,
    Word,
    letter,
    reduce_word,
)

_POWER = re.compile(r"\^(\d+)")


def parse_word_text(
    text: str,
    names: tuple[str, ...],
    max_length: int = DEFAULT_MAX_WORD_LENGTH,
    line: int | None = None,
) -> Word:
    """
    Parse one word over single-letter generator names.

    Raises:
        ParseError: unknown or undeclared letter, or a malformed ``^``.
    """
    index = {name: g for g, name in enumerate(names)}
    letters: list[int] = []
    last: int | None = None
    text = "".join(text.split())
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "^":
            match = _POWER.match(text, i)
            if match is None or last is None or int(match.group(1)) < 1:
                raise ParseError(f"malformed '^' at position {i} in {text!r}", line)
            k = int(match.group(1))
            if len(letters) + k - 1 > max_length:
                raise ParseError(f"word exceeds {max_length} letters", line)
            letters.extend([last] * (k - 1))
            i = match.end()
            continue
        if not ch.isalpha():
            raise ParseError(f"unknown letter {ch!r} in {text!r}", line)
        g = index.get(ch.lower())
        if g is None:
            raise ParseError(f"letter {ch!r} is not a declared generator", line)
        last = letter(g, -1 if ch.isupper() else 1)
        letters.append(last)
        i += 1
    if len(letters) > max_length:
        raise ParseError(f"word exceeds {max_length} letters", line)
    return reduce_word(letters, len(names), max_length)


def parse_presentation_text(
    text: str, max_length: int = DEFAULT_MAX_WORD_LENGTH
) -> Presentation:
    """
    Parse ``<gens | relators>``; relators are freely reduced, empty ones dropped.

    Raises:
        ParseError: malformed brackets, bad generator list, or a bad word.
    """
    body = text.strip()
    if not (body.startswith("<") and body.endswith(">")) or body.count("|") != 1:
        raise ParseError(f"expected '<generators | relators>', got {text!r}")
    gens_text, rels_text = body[1:-1].split("|")
    names = tuple(gens_text.split())
    if not names:
        raise ParseError("empty generator list")
    for name in names:
        if len(name) != 1 or not name.islower():
            raise ParseError(f"generator {name!r} is not a lowercase letter")
    if len(set(names)) != len(names):
        raise ParseError("duplicate generator")

    relators: list[Word] = []
    if rels_text.strip():
        for part in rels_text.split(","):
            if not part.strip():
                raise ParseError("empty relator between commas")
            relators.append(parse_word_text(part, names, max_length))
    return make_presentation(names, relators)


def serialize_word(w: Word, names: tuple[str, ...]) -> str:
    """Runs of two or more equal letters are written with ``^k``."""
    out: list[str] = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        name = names[letters[i] >> 1]
        symbol = name.upper() if letters[i] & 1 else name
        run = j - i
        out.append(symbol if run == 1 else f"{symbol}^{run}")
        i = j
    return "".join(out)


def serialize_presentation(p: Presentation) -> str:
    """
    Raises:
        UnsupportedInputError: generator names are not single lowercase letters.
    """
    if not is_single_letter_alphabet(p) or p.generator_count == 0:
        raise UnsupportedInputError(
            "Only presentations on 1 to 26 lowercase letters have a text form",
            field="generator_names",
        )
    names = p.generator_names
    relators = ", ".join(serialize_word(r, names) for r in p.relators)
    return f"<{' '.join(names)} | {relators}>"
