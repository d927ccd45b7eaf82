"""
Coset tables and Todd-Coxeter coset enumeration.

A complete coset table is a transitive action of the generators on the cosets
of a subgroup H: the set G/H, with coset 0 the coset H itself. Columns are
letters (g0, g0^-1, g1, g1^-1, ...), see ``galois_covers.domain.words``.

Enumeration follows the HLT strategy: every live coset in turn has each
relator scanned and filled, then its row completed. Coincidences are merged
with a union-find that always keeps the lower coset number.
"""

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field

from galois_covers.config.logging import get_logger
from galois_covers.domain.exceptions import (
    AlphabetMismatchError,
    InputError,
    ResourceExhaustedError,
)
from galois_covers.domain.presentation import Presentation
from galois_covers.domain.words import Word, concat_words, empty_word, reduce_word

logger = get_logger(__name__)

DEFAULT_MAX_COSETS = 1_000_000

UNDEFINED = -1

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CosetTable:
    """
    Domain value: a complete, transitive coset table.

    ``rows[c][x]`` is the coset reached from coset c by letter x. Equality
    compares the presentation and the rows only, so two standardized tables
    are equal exactly when they describe the same pointed subgroup.
    """

    presentation: Presentation
    rows: Rows
    subgroup_generators: tuple[Word, ...] | None = field(
        default=None, compare=False
    )

    @property
    def coset_count(self) -> int:
        return len(self.rows)

    @property
    def basepoint_coset(self) -> int:
        return 0

    @property
    def generator_count(self) -> int:
        return self.presentation.generator_count

    def act(self, coset: int, x: int) -> int:
        return self.rows[coset][x]

    def permutation(self, generator: int) -> tuple[int, ...]:
        """Image of every coset under a generator."""
        return tuple(row[2 * generator] for row in self.rows)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.coset_count, tuple(x for row in self.rows for x in row))


def table_violations(p: Presentation, rows: Sequence[Sequence[int]]) -> list[str]:
    """Every way ``rows`` fails to be a complete transitive table over p."""
    violations: list[str] = []
    n = len(rows)
    width = 2 * p.generator_count
    if n == 0:
        return ["table has no cosets"]
    for c, row in enumerate(rows):
        if len(row) != width:
            violations.append(f"coset {c}: expected {width} entries, got {len(row)}")
            continue
        for x, d in enumerate(row):
            if not 0 <= d < n:
                violations.append(f"coset {c}: entry {x} undefined or out of range")
            elif len(rows[d]) == width and rows[d][x ^ 1] != c:
                violations.append(
                    f"coset {c}: columns {x} and {x ^ 1} are not mutually inverse"
                )
    if violations:
        return violations

    for c in range(n):
        for index, relator in enumerate(p.relators):
            d = c
            for x in relator:
                d = rows[d][x]
            if d != c:
                violations.append(f"relator {index} does not fix coset {c}")

    seen = {0}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for d in rows[c]:
            if d not in seen:
                seen.add(d)
                queue.append(d)
    if len(seen) != n:
        violations.append(f"table is not transitive: {n - len(seen)} unreachable cosets")
    return violations


def make_coset_table(
    p: Presentation,
    rows: Sequence[Sequence[int]],
    subgroup_generators: Sequence[Word] | None = None,
) -> CosetTable:
    """
    Validate rows and wrap them in a CosetTable (not standardized).

    Raises:
        InputError: the rows violate a table invariant.
    """
    violations = table_violations(p, rows)
    if violations:
        raise InputError("Invalid coset table: " + "; ".join(violations), field="rows")
    gens = tuple(subgroup_generators) if subgroup_generators is not None else None
    return CosetTable(p, tuple(tuple(row) for row in rows), gens)


class _Enumerator:
    """Mutable HLT state. Dead cosets keep their index; ``parent`` points down."""

    def __init__(self, p: Presentation, max_cosets: int):
        self.width = 2 * p.generator_count
        self.relators = [r.letters for r in p.relators]
        self.max_cosets = max_cosets
        self.table: list[list[int]] = []
        self.parent: list[int] = []
        self.live = 0
        self.defined = 0
        self.coincidences = 0
        self._new_coset()

    def _new_coset(self) -> int:
        if self.live >= self.max_cosets:
            raise ResourceExhaustedError(self.max_cosets, self.live + 1)
        c = len(self.table)
        self.table.append([UNDEFINED] * self.width)
        self.parent.append(c)
        self.live += 1
        self.defined += 1
        if self.defined % 100_000 == 0:
            logger.debug(
                "Enumeration progress: %d defined, %d live", self.defined, self.live
            )
        return c

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, x: int) -> int:
        d = self._new_coset()
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return d

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        table = self.table
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] != UNDEFINED:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] != UNDEFINED:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def _merge(self, k: int, m: int, queue: list[int]) -> None:
        k, m = self.rep(k), self.rep(m)
        if k == m:
            return
        low, high = min(k, m), max(k, m)
        self.parent[high] = low
        self.live -= 1
        self.coincidences += 1
        queue.append(high)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.width):
                f = table[e][x]
                if f == UNDEFINED:
                    continue
                table[f][x ^ 1] = UNDEFINED
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] != UNDEFINED:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] != UNDEFINED:
                    self._merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def run(self, subgroup_words: Sequence[Sequence[int]]) -> None:
        for h in subgroup_words:
            self.scan_and_fill(0, h)
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for relator in self.relators:
                    self.scan_and_fill(c, relator)
                    if not self.alive(c):
                        break
                else:
                    for x in range(self.width):
                        if self.table[c][x] == UNDEFINED:
                            self.define(c, x)
            c += 1

    def compact_rows(self) -> list[list[int]]:
        live = [c for c in range(len(self.table)) if self.alive(c)]
        index = {c: i for i, c in enumerate(live)}
        return [[index[self.rep(d)] for d in self.table[c]] for c in live]


def todd_coxeter(
    p: Presentation,
    subgroup_generators: Sequence[Word],
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """
    Enumerate the cosets of the subgroup generated by ``subgroup_generators``.

    Returns the standardized complete table; coset_count is the index [G : H].

    Raises:
        AlphabetMismatchError: a subgroup word is over another alphabet.
        ResourceExhaustedError: more than ``max_cosets`` live cosets were needed.
    """
    for h in subgroup_generators:
        if h.generator_count != p.generator_count:
            raise AlphabetMismatchError(p.generator_count, h.generator_count)
    if max_cosets < 1:
        raise InputError("max_cosets must be positive", field="max_cosets")

    enumerator = _Enumerator(p, max_cosets)
    enumerator.run([h.letters for h in subgroup_generators])
    logger.debug(
        "Enumeration done: index %d, %d cosets defined, %d coincidences",
        enumerator.live,
        enumerator.defined,
        enumerator.coincidences,
    )
    rows = enumerator.compact_rows()
    table = CosetTable(
        p, tuple(tuple(r) for r in rows), tuple(subgroup_generators)
    )
    return standardize_table(table)


def _bfs_order(rows: Rows, start: int) -> tuple[list[int], list[tuple[int, int]]]:
    """
    Breadth-first discovery from ``start``, columns scanned in letter order.

    Returns the discovery order and, per discovered coset, (parent, letter);
    the start coset has parent -1.
    """
    order = [start]
    via: dict[int, tuple[int, int]] = {start: (-1, -1)}
    head = 0
    while head < len(order):
        c = order[head]
        head += 1
        for x, d in enumerate(rows[c]):
            if d not in via:
                via[d] = (c, x)
                order.append(d)
    return order, [via[c] for c in order]


def rebase_table(t: CosetTable, coset: int) -> CosetTable:
    """
    Standardize the table with ``coset`` moved to the basepoint: the table of
    the stabilizer of ``coset``, a conjugate of the original subgroup.
    """
    if not 0 <= coset < t.coset_count:
        raise InputError(f"Coset {coset} out of range", field="coset")
    order, _ = _bfs_order(t.rows, coset)
    if len(order) != t.coset_count:
        raise InputError("Coset table is not transitive", field="rows")
    index = {c: i for i, c in enumerate(order)}
    rows = tuple(tuple(index[d] for d in t.rows[c]) for c in order)
    gens = t.subgroup_generators if coset == 0 else None
    return CosetTable(t.presentation, rows, gens)


def standardize_table(t: CosetTable) -> CosetTable:
    """Renumber cosets in breadth-first discovery order from coset 0."""
    return rebase_table(t, 0)


def trace_word(t: CosetTable, w: Word, c: int) -> int:
    """The coset reached from c by reading w left to right."""
    if w.generator_count != t.generator_count:
        raise AlphabetMismatchError(t.generator_count, w.generator_count)
    if not 0 <= c < t.coset_count:
        raise InputError(f"Coset {c} out of range", field="coset")
    rows = t.rows
    for x in w.letters:
        c = rows[c][x]
    return c


def transversal(t: CosetTable) -> list[Word]:
    """Breadth-first representative word u_c for every coset c (u_0 empty)."""
    k = t.generator_count
    order, via = _bfs_order(t.rows, 0)
    words: dict[int, Word] = {0: empty_word(k)}
    for c, (parent, x) in zip(order, via, strict=True):
        if parent >= 0:
            words[c] = concat_words(words[parent], reduce_word((x,), k))
    return [words[c] for c in range(t.coset_count)]


def schreier_generators(t: CosetTable) -> list[Word]:
    """
    Nontrivial Schreier generators u_c * g * u_(c.g)^-1 of the stabilizer of
    coset 0, ordered by (coset, generator).
    """
    k = t.generator_count
    u = transversal(t)
    result: list[Word] = []
    for c in range(t.coset_count):
        for g in range(k):
            d = t.rows[c][2 * g]
            w = concat_words(
                concat_words(u[c], reduce_word((2 * g,), k)), u[d].inverse()
            )
            if not w.is_empty():
                result.append(w)
    return result


def subgroup_words(t: CosetTable) -> list[Word]:
    """Generators of H: the words that produced t, else its Schreier generators."""
    if t.subgroup_generators is not None:
        return list(t.subgroup_generators)
    return schreier_generators(t)


def conjugates(t: CosetTable) -> list[CosetTable]:
    """The standardized table of the stabilizer of every coset, by coset."""
    return [rebase_table(t, c) for c in range(t.coset_count)]


def is_normal(t: CosetTable) -> bool:
    """True when every coset stabilizer equals H (the cover is regular)."""
    base = standardize_table(t)
    return all(other == base for other in conjugates(t))


def conjugacy_classes(tables: Sequence[CosetTable]) -> list[list[CosetTable]]:
    """
    Group pointed subgroups into conjugacy classes, classes ordered by their
    first member in the input order. Members keep their input order.
    """
    class_of: dict[CosetTable, int] = {}
    classes: list[list[CosetTable]] = []
    for t in tables:
        key = standardize_table(t)
        if key in class_of:
            classes[class_of[key]].append(t)
            continue
        class_of.update({c: len(classes) for c in conjugates(t)})
        classes.append([t])
    return classes


def trivial_subgroup_table(
    p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    return todd_coxeter(p, [], max_cosets)


def group_order(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    """Order of the presented group (index of the trivial subgroup)."""
    return trivial_subgroup_table(p, max_cosets).coset_count
