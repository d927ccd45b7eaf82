"""
Free-group words over a finite generator alphabet.

A letter is encoded as a single int: generator g with sign +1 is 2*g, with
sign -1 is 2*g + 1. The inverse of a letter is therefore ``letter ^ 1`` and
letters double as coset-table column indices (g0, g0^-1, g1, g1^-1, ...).
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from galois_covers.domain.exceptions import AlphabetMismatchError, WordError

DEFAULT_MAX_WORD_LENGTH = 2**20


def letter(generator: int, sign: int = 1) -> int:
    """Encode a signed generator as a letter."""
    if sign not in (1, -1):
        raise WordError(f"Letter sign must be +1 or -1, got {sign}")
    if generator < 0:
        raise WordError(f"Generator index must be nonnegative, got {generator}")
    return 2 * generator + (0 if sign == 1 else 1)


def letter_generator(x: int) -> int:
    return x >> 1


def letter_sign(x: int) -> int:
    return -1 if x & 1 else 1


def inverse_letter(x: int) -> int:
    return x ^ 1


@dataclass(frozen=True)
class Word:
    """
    Domain value: a freely reduced word in the free group on
    ``generator_count`` generators.

    Construct through ``reduce_word``; the constructor trusts its input.
    """

    letters: tuple[int, ...]
    generator_count: int

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def signed(self) -> list[tuple[int, int]]:
        """The word as (generator, sign) pairs."""
        return [(letter_generator(x), letter_sign(x)) for x in self.letters]

    def inverse(self) -> "Word":
        return invert_word(self)

    def power(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        return reduce_word(base.letters * abs(exponent), self.generator_count)

    def exponent_sums(self) -> list[int]:
        """Signed letter count per generator (the abelianized image)."""
        sums = [0] * self.generator_count
        for x in self.letters:
            sums[letter_generator(x)] += letter_sign(x)
        return sums


def empty_word(generator_count: int) -> Word:
    return Word((), generator_count)


def reduce_word(
    raw: Iterable[int],
    generator_count: int,
    max_length: int = DEFAULT_MAX_WORD_LENGTH,
) -> Word:
    """
    Freely reduce a sequence of letters.

    Raises:
        WordError: a letter names a generator outside the alphabet, or the
            input exceeds ``max_length`` letters.
    """
    if generator_count < 0:
        raise WordError(f"Generator count must be nonnegative, got {generator_count}")
    bound = 2 * generator_count
    stack: list[int] = []
    count = 0
    for x in raw:
        count += 1
        if count > max_length:
            raise WordError(f"Word exceeds the length cap of {max_length} letters")
        if not 0 <= x < bound:
            raise WordError(
                f"Letter for generator {x >> 1} out of range "
                f"for {generator_count} generators",
                field="letters",
            )
        if stack and stack[-1] == x ^ 1:
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack), generator_count)


def invert_word(w: Word) -> Word:
    return Word(tuple(x ^ 1 for x in reversed(w.letters)), w.generator_count)


def concat_words(u: Word, v: Word) -> Word:
    if u.generator_count != v.generator_count:
        raise AlphabetMismatchError(u.generator_count, v.generator_count)
    left = list(u.letters)
    right = v.letters
    i = 0
    # Only the seam can cancel: both halves are already reduced.
    while left and i < len(right) and left[-1] == right[i] ^ 1:
        left.pop()
        i += 1
    return Word(tuple(left) + right[i:], u.generator_count)


def cyclic_rotations(w: Word) -> list[Word]:
    """All cyclic rotations of w, each freely reduced."""
    letters = w.letters
    return [
        reduce_word(letters[i:] + letters[:i], w.generator_count)
        for i in range(max(len(letters), 1))
    ]
