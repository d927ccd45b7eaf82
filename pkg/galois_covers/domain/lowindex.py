"""
Low-index subgroup enumeration.

Backtracking over partial coset tables. The first undefined entry in
row-major order is always the one branched on, and a new coset may only be
introduced there, so every complete table reached is already standardized
and every pointed subgroup is produced exactly once.
"""

from concurrent.futures import ProcessPoolExecutor

from galois_covers.config.logging import get_logger
from galois_covers.domain.coset import UNDEFINED, CosetTable, make_coset_table
from galois_covers.domain.exceptions import InputError
from galois_covers.domain.presentation import Presentation
from galois_covers.domain.words import cyclic_rotations

logger = get_logger(__name__)


class _PartialTable:
    """A partial table with at most ``max_index`` cosets and an undo trail."""

    def __init__(self, width: int, max_index: int, scan_words: list[tuple[int, ...]]):
        self.width = width
        self.max_index = max_index
        self.scan_words = scan_words
        self.rows: list[list[int]] = [[UNDEFINED] * width]
        self.trail: list[tuple[int, int]] = []

    def assign(self, c: int, x: int, d: int) -> None:
        self.rows[c][x] = d
        self.rows[d][x ^ 1] = c
        self.trail.append((c, x))
        self.trail.append((d, x ^ 1))

    def undo(self, mark: int, count: int) -> None:
        while len(self.trail) > mark:
            c, x = self.trail.pop()
            self.rows[c][x] = UNDEFINED
        del self.rows[count:]

    def first_gap(self) -> tuple[int, int] | None:
        for c, row in enumerate(self.rows):
            for x, d in enumerate(row):
                if d == UNDEFINED:
                    return c, x
        return None

    def _scan(self, c: int, word: tuple[int, ...]) -> bool | None:
        """
        Trace word from c in both directions.

        Returns False on a contradiction, True if a deduction was made,
        None if nothing was learned.
        """
        rows = self.rows
        f = b = c
        i, j = 0, len(word) - 1
        while i <= j and rows[f][word[i]] != UNDEFINED:
            f = rows[f][word[i]]
            i += 1
        if i > j:
            return None if f == b else False
        while j >= i and rows[b][word[j] ^ 1] != UNDEFINED:
            b = rows[b][word[j] ^ 1]
            j -= 1
        if j < i:
            return None if f == b else False
        if i == j:
            if rows[b][word[i] ^ 1] != UNDEFINED:
                return False
            self.assign(f, word[i], b)
            return True
        return None

    def propagate(self) -> bool:
        """Apply deductions until stable; False if a relator is violated."""
        changed = True
        while changed:
            changed = False
            for c in range(len(self.rows)):
                for word in self.scan_words:
                    outcome = self._scan(c, word)
                    if outcome is False:
                        return False
                    if outcome:
                        changed = True
        return True

    def choices(self, c: int, x: int) -> list[int]:
        """Targets for entry (c, x): free existing cosets, then one new coset."""
        options = [d for d in range(len(self.rows)) if self.rows[d][x ^ 1] == UNDEFINED]
        if len(self.rows) < self.max_index:
            options.append(len(self.rows))
        return options

    def try_assign(self, c: int, x: int, d: int) -> bool:
        if d == len(self.rows):
            self.rows.append([UNDEFINED] * self.width)
        self.assign(c, x, d)
        return self.propagate()


def _scan_words(p: Presentation) -> list[tuple[int, ...]]:
    words: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for relator in p.relators:
        for rotation in cyclic_rotations(relator):
            if rotation.letters and rotation.letters not in seen:
                seen.add(rotation.letters)
                words.append(rotation.letters)
    return words


def _search(
    p: Presentation, max_index: int, prefix: tuple[int, ...] = ()
) -> list[tuple[tuple[int, ...], ...]]:
    """
    Depth-first search. ``prefix`` forces the first choices (used to split the
    tree between workers); complete tables are returned as row tuples.
    """
    width = 2 * p.generator_count
    table = _PartialTable(width, max_index, _scan_words(p))
    found: list[tuple[tuple[int, ...], ...]] = []

    def visit(depth: int) -> None:
        gap = table.first_gap()
        if gap is None:
            found.append(tuple(tuple(row) for row in table.rows))
            return
        c, x = gap
        options = table.choices(c, x)
        if depth < len(prefix):
            options = [prefix[depth]] if prefix[depth] in options else []
        for d in options:
            mark, count = len(table.trail), len(table.rows)
            if table.try_assign(c, x, d):
                visit(depth + 1)
            table.undo(mark, count)

    if table.propagate():
        visit(0)
    return found


def _first_level_choices(p: Presentation, max_index: int) -> list[int]:
    if p.generator_count == 0:
        return []
    table = _PartialTable(2 * p.generator_count, max_index, _scan_words(p))
    if not table.propagate():
        return []
    gap = table.first_gap()
    if gap is None:
        return []
    return table.choices(*gap)


def low_index_subgroups(
    p: Presentation, max_index: int, workers: int = 1
) -> list[CosetTable]:
    """
    All pointed subgroups of index at most ``max_index`` as standardized
    tables, sorted by (coset_count, row-major table contents).

    With ``workers > 1`` the subtrees below the first branching point are
    searched in separate processes; the merged output is identical.
    """
    if max_index < 1:
        raise InputError("max_index must be positive", field="max_index")

    rows_found: list[tuple[tuple[int, ...], ...]]
    choices = _first_level_choices(p, max_index)
    if workers > 1 and len(choices) > 1:
        logger.debug(f"Splitting low-index search over {len(choices)} subtrees")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _search, [p] * len(choices), [max_index] * len(choices),
                [(d,) for d in choices],
            )
            rows_found = [rows for part in parts for rows in part]
    else:
        rows_found = _search(p, max_index)

    tables = [make_coset_table(p, rows) for rows in rows_found]
    tables.sort(key=CosetTable.sort_key)
    logger.debug(
        "Found %d subgroups of index <= %d", len(tables), max_index
    )
    return tables
