"""
Finitely presented groups and their abelianization.

H1 of a presentation comes from the Smith normal form of its exponent-sum
matrix: the diagonal gives the invariant factors and the free rank.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from galois_covers.domain.exceptions import PresentationError, WordError
from galois_covers.domain.smith import smith_normal_form
from galois_covers.domain.words import Word, reduce_word


@dataclass(frozen=True)
class Presentation:
    """
    Domain value: a finitely presented group <generators | relators>.

    Relators are freely reduced and nonempty; their order is preserved.
    """

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)


@dataclass(frozen=True)
class AbelianInvariants:
    """
    Domain value: the abelianized group Z^free_rank + Z/f1 + ... + Z/fk,
    with every factor >= 2 dividing the next.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int

    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        result = 1
        for f in self.invariant_factors:
            result *= f
        return result


def default_names(count: int) -> tuple[str, ...]:
    """a..z while they last, then g0, g1, ... (complexes can have many generators)."""
    if count <= 26:
        return tuple(chr(ord("a") + i) for i in range(count))
    return tuple(f"g{i}" for i in range(count))


def is_single_letter_alphabet(p: Presentation) -> bool:
    return all(len(n) == 1 and n.islower() for n in p.generator_names)


def make_presentation(
    names: Sequence[str], relators: Iterable[Word | Sequence[int]]
) -> Presentation:
    """
    Build a presentation, freely reducing relators and dropping empty ones.

    Raises:
        PresentationError: duplicate or malformed generator names, or a relator
            letter outside the alphabet.
    """
    names = tuple(names)
    seen: set[str] = set()
    for name in names:
        if not name.isidentifier():
            raise PresentationError(
                f"Invalid generator name {name!r}", field="generator_names"
            )
        if name in seen:
            raise PresentationError(
                f"Duplicate generator name {name!r}", field="generator_names"
            )
        seen.add(name)

    reduced: list[Word] = []
    for index, relator in enumerate(relators):
        letters = relator.letters if isinstance(relator, Word) else relator
        try:
            word = reduce_word(letters, len(names))
        except WordError as e:
            raise PresentationError(f"Relator {index}: {e}", field="relators") from e
        if not word.is_empty():
            reduced.append(word)
    return Presentation(names, tuple(reduced))


def exponent_matrix(p: Presentation) -> list[list[int]]:
    """One row per relator, one column per generator: signed exponent sums."""
    return [r.exponent_sums() for r in p.relators]


def abelianization_invariants(p: Presentation) -> AbelianInvariants:
    """Invariant factors and free rank of the abelianized group (H1)."""
    matrix = exponent_matrix(p)
    if not matrix:
        return AbelianInvariants((), p.generator_count)
    form = smith_normal_form(matrix)
    factors = tuple(d for d in form.diagonal if d > 1)
    return AbelianInvariants(factors, p.generator_count - form.rank)
