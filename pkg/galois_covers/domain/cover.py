"""
The constructive Galois correspondence between subgroups of pi1 and pointed
connected coverings of a 2-complex.

Cells of a cover are ordered lexicographically by (base cell, coset): the
lift of base cell i at coset c has index i * sheets + c. The lift of the base
basepoint at coset 0 is the basepoint of the total complex.
"""

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from galois_covers.config.logging import get_logger
from galois_covers.domain.complex import (
    FundamentalGroupData,
    TwoComplex,
    euler_characteristic,
    fundamental_group_presentation,
    is_connected,
    presentation_complex,
    reverse_path,
    step,
    tree_path,
)
from galois_covers.domain.coset import (
    DEFAULT_MAX_COSETS,
    CosetTable,
    make_coset_table,
    standardize_table,
    subgroup_words,
    todd_coxeter,
    trace_word,
)
from galois_covers.domain.exceptions import (
    AlphabetMismatchError,
    ComplexError,
    InputError,
)
from galois_covers.domain.lowindex import low_index_subgroups
from galois_covers.domain.presentation import Presentation
from galois_covers.domain.words import Word

logger = get_logger(__name__)


@dataclass(frozen=True)
class Projection:
    """Domain value: cell maps total -> base, one entry per total cell."""

    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    face_map: tuple[int, ...]


@dataclass(frozen=True)
class CoveringMap:
    """
    Domain value: a covering p : total -> base with cell-level projections.

    ``vertex_lift_index[v]`` is the (base vertex, coset) that total vertex v
    lies over.
    """

    base: TwoComplex
    total: TwoComplex
    subgroup_table: CosetTable
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    face_map: tuple[int, ...]
    vertex_lift_index: tuple[tuple[int, int], ...]
    base_group: FundamentalGroupData = field(compare=False, repr=False)

    @property
    def sheets(self) -> int:
        return self.subgroup_table.coset_count

    @property
    def projection(self) -> Projection:
        return Projection(self.vertex_map, self.edge_map, self.face_map)


def _base_group(x: TwoComplex) -> FundamentalGroupData:
    if not is_connected(x):
        raise ComplexError(
            ["complex is not connected; take its basepoint component first"]
        )
    return fundamental_group_presentation(x)


def build_cover(x: TwoComplex, t: CosetTable) -> CoveringMap:
    """
    The pointed connected cover attached to the subgroup of table t.

    Vertex (v, c) is the lift of v at coset c; base edge e : u -> v labelled w
    lifts at coset c to (u, c) -> (v, c.w).

    Raises:
        AlphabetMismatchError: t is over a different number of generators.
        InputError: t is not an action of pi1(x).
    """
    group = _base_group(x)
    p = group.presentation
    if t.generator_count != p.generator_count:
        raise AlphabetMismatchError(p.generator_count, t.generator_count)
    for index, relator in enumerate(p.relators):
        if any(trace_word(t, relator, c) != c for c in range(t.coset_count)):
            raise InputError(
                f"Table does not satisfy relator {index} of pi1 of the complex",
                field="table",
            )
    t = CosetTable(p, t.rows, t.subgroup_generators)
    n = t.coset_count

    vertex_lift_index = tuple((v, c) for v in range(x.vertex_count) for c in range(n))

    edge_target_coset: list[list[int]] = []
    edges: list[tuple[int, int]] = []
    for e, (src, dst) in enumerate(x.edges):
        label = group.edge_labels[e]
        targets = [trace_word(t, label, c) for c in range(n)]
        edge_target_coset.append(targets)
        edges.extend((src * n + c, dst * n + targets[c]) for c in range(n))

    # source coset of the lift of e ending at coset c
    edge_source_coset: list[list[int]] = []
    for targets in edge_target_coset:
        inverse = [0] * n
        for c, d in enumerate(targets):
            inverse[d] = c
        edge_source_coset.append(inverse)

    faces: list[tuple[int, ...]] = []
    for boundary in x.faces:
        for c in range(n):
            current = c
            lifted: list[int] = []
            for s in boundary:
                e = s >> 1
                if s & 1:
                    current = edge_source_coset[e][current]
                    lifted.append(step(e * n + current, -1))
                else:
                    lifted.append(step(e * n + current, 1))
                    current = edge_target_coset[e][current]
            faces.append(tuple(lifted))

    total = TwoComplex(
        vertex_count=x.vertex_count * n,
        edges=tuple(edges),
        faces=tuple(faces),
        basepoint=x.basepoint * n,
        cell3_count=x.cell3_count * n,
        name=f"{x.name}~{n}" if x.name else "",
    )
    logger.debug(
        "Built %d-sheeted cover: %d vertices, %d edges, %d faces",
        n,
        total.vertex_count,
        total.edge_count,
        total.face_count,
    )
    return CoveringMap(
        base=x,
        total=total,
        subgroup_table=t,
        vertex_map=tuple(v for v in range(x.vertex_count) for _ in range(n)),
        edge_map=tuple(e for e in range(x.edge_count) for _ in range(n)),
        face_map=tuple(f for f in range(x.face_count) for _ in range(n)),
        vertex_lift_index=vertex_lift_index,
        base_group=group,
    )


def fiber_over(cover: CoveringMap, v: int) -> list[int]:
    """Total vertices over base vertex v, in coset order."""
    if not 0 <= v < cover.base.vertex_count:
        raise InputError(f"Vertex {v} out of range", field="vertex")
    return [w for w, base in enumerate(cover.vertex_map) if base == v]


def _lift_path(cover: CoveringMap, steps: Sequence[int], start: int) -> int:
    """Lift a base edge path to the total complex from ``start``; its end."""
    n = cover.sheets
    total = cover.total
    current = start
    for s in steps:
        e = s >> 1
        for lift in range(e * n, e * n + n):
            src, dst = total.edges[lift]
            if s & 1 and dst == current:
                current = src
                break
            if not s & 1 and src == current:
                current = dst
                break
        else:
            raise ComplexError([f"edge {e} has no lift at total vertex {current}"])
    return current


def monodromy_action(cover: CoveringMap) -> CosetTable:
    """
    The action of pi1(base) on the basepoint fiber, read off by lifting the
    loop of every generator from every fiber point.
    """
    group = cover.base_group
    base = cover.base
    p = group.presentation
    fiber = fiber_over(cover, base.basepoint)
    coset_of = {w: cover.vertex_lift_index[w][1] for w in fiber}
    generator_edges = sorted(
        (label.letters[0] >> 1, e)
        for e, label in group.edge_labels.items()
        if not label.is_empty()
    )

    n = cover.sheets
    rows = [[0] * (2 * p.generator_count) for _ in range(n)]
    for g, e in generator_edges:
        src, dst = base.edges[e]
        loop = tree_path(group.tree, src) + [step(e)] + reverse_path(
            tree_path(group.tree, dst)
        )
        for w in fiber:
            c = coset_of[w]
            d = coset_of[_lift_path(cover, loop, w)]
            rows[c][2 * g] = d
            rows[d][2 * g + 1] = c
    return make_coset_table(p, rows, cover.subgroup_table.subgroup_generators)


def _projected_loop_words(
    total: TwoComplex, edge_map: Sequence[int], base_group: FundamentalGroupData
) -> list[Word]:
    """Every generator loop of the total complex, projected and read in pi1(base)."""
    total_group = fundamental_group_presentation(total)
    words: list[Word] = []
    for e, label in total_group.edge_labels.items():
        if label.is_empty():
            continue
        src, dst = total.edges[e]
        loop = tree_path(total_group.tree, src) + [step(e)] + reverse_path(
            tree_path(total_group.tree, dst)
        )
        projected = [step(edge_map[s >> 1], -1 if s & 1 else 1) for s in loop]
        words.append(base_group.path_word(projected))
    return words


def subgroup_of_cover(
    cover: CoveringMap, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """
    The image of pi1(total) in pi1(base): project every generator loop of the
    total complex and enumerate the subgroup those words generate.
    """
    words = _projected_loop_words(cover.total, cover.edge_map, cover.base_group)
    return todd_coxeter(cover.base_group.presentation, words, max_cosets)


def subgroup_of_projection(
    base: TwoComplex,
    total: TwoComplex,
    projection: Projection,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """
    The subgroup of pi1(base) for a cover given only by its cell maps, as read
    back from a total complex and a projection file.

    Raises:
        ComplexError: the maps are not a pointed connected covering of ``base``.
    """
    group = _base_group(base)
    violations = projection_violations(base, total, projection)
    if violations:
        raise ComplexError(violations)
    words = _projected_loop_words(total, projection.edge_map, group)
    return todd_coxeter(group.presentation, words, max_cosets)


def universal_cover(
    x: TwoComplex, max_cosets: int = DEFAULT_MAX_COSETS
) -> CoveringMap:
    """
    The cover attached to the trivial subgroup.

    Raises:
        ResourceExhaustedError: pi1(x) has more than ``max_cosets`` elements
            (or is infinite).
    """
    group = _base_group(x)
    return build_cover(x, todd_coxeter(group.presentation, [], max_cosets))


def cayley_complex(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CoveringMap:
    """Universal cover of the presentation complex; its 1-skeleton is the Cayley graph."""
    return universal_cover(presentation_complex(p, name="cayley"), max_cosets)


def sheet_count(cover: CoveringMap) -> int:
    return cover.sheets


def deck_transformations(cover: CoveringMap) -> list[int]:
    """
    Cosets c such that sending coset 0 to c extends to a deck transformation:
    exactly those fixed by every generator of the subgroup.
    """
    t = cover.subgroup_table
    generators = subgroup_words(t)
    return [
        c
        for c in range(t.coset_count)
        if all(trace_word(t, h, c) == c for h in generators)
    ]


def deck_group_order(cover: CoveringMap) -> int:
    return len(deck_transformations(cover))


def _edge_ends(
    x: TwoComplex, edge_map: Sequence[int] | None = None
) -> list[list[tuple[int, int]]]:
    """Per vertex, the sorted (edge, end) pairs meeting it; edges renamed by edge_map."""
    ends: list[list[tuple[int, int]]] = [[] for _ in range(x.vertex_count)]
    for e, (src, dst) in enumerate(x.edges):
        label = edge_map[e] if edge_map is not None else e
        ends[src].append((label, 0))
        ends[dst].append((label, 1))
    return [sorted(pairs) for pairs in ends]


def projection_violations(
    base: TwoComplex,
    total: TwoComplex,
    projection: Projection,
    sheets: int | None = None,
) -> list[str]:
    """
    Every way the cell maps fail to be a pointed connected covering of base by
    total. The sheet count defaults to |V(total)| / |V(base)|.
    """
    violations: list[str] = []
    for name, mapping, count, base_count in (
        ("vertex", projection.vertex_map, total.vertex_count, base.vertex_count),
        ("edge", projection.edge_map, total.edge_count, base.edge_count),
        ("face", projection.face_map, total.face_count, base.face_count),
    ):
        if len(mapping) != count:
            violations.append(f"{name} map has {len(mapping)} entries, expected {count}")
        elif any(not 0 <= b < base_count for b in mapping):
            violations.append(f"{name} map sends a cell outside the base")
    if violations:
        return violations

    n = sheets if sheets is not None else total.vertex_count // base.vertex_count
    for name, mapping, count in (
        ("vertex", projection.vertex_map, base.vertex_count),
        ("edge", projection.edge_map, base.edge_count),
        ("face", projection.face_map, base.face_count),
    ):
        sizes = [0] * count
        for cell in mapping:
            sizes[cell] += 1
        for cell, size in enumerate(sizes):
            if size != n:
                violations.append(f"{name} {cell} has {size} lifts, expected {n}")

    vmap, emap = projection.vertex_map, projection.edge_map
    for e, (src, dst) in enumerate(total.edges):
        b_src, b_dst = base.edges[emap[e]]
        if (vmap[src], vmap[dst]) != (b_src, b_dst):
            violations.append(f"total edge {e} does not project onto its base edge")

    base_ends = _edge_ends(base)
    for w, pairs in enumerate(_edge_ends(total, emap)):
        if pairs != base_ends[vmap[w]]:
            violations.append(f"total vertex {w} is not mapped bijectively near itself")

    lifts: dict[int, set[tuple[int, ...]]] = {}
    for f, boundary in enumerate(total.faces):
        projected = tuple(step(emap[s >> 1], -1 if s & 1 else 1) for s in boundary)
        if projected != base.faces[projection.face_map[f]]:
            violations.append(f"total face {f} does not project onto its base face")
        seen = lifts.setdefault(projection.face_map[f], set())
        if boundary in seen:
            violations.append(f"total face {f} repeats another lift")
        seen.add(boundary)

    if vmap[total.basepoint] != base.basepoint:
        violations.append("total basepoint does not lie over the base basepoint")
    if not is_connected(total):
        violations.append("total complex is not connected")
    if euler_characteristic(total) != n * euler_characteristic(base):
        violations.append("Euler characteristic is not multiplicative in the sheets")
    return violations


def validate_cover(cover: CoveringMap) -> list[str]:
    """Every violated covering invariant; empty when the cover is sound."""
    violations = projection_violations(
        cover.base, cover.total, cover.projection, cover.sheets
    )
    total = cover.total
    if cover.vertex_lift_index[total.basepoint] != (cover.base.basepoint, 0):
        violations.append("total basepoint is not the coset-0 lift of the base basepoint")
    return violations


@dataclass(frozen=True)
class RoundTripResult:
    """Outcome of both Galois round trips for one subgroup."""

    position: int
    index: int
    subgroup_to_cover_ok: bool
    cover_to_action_ok: bool
    violations: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.subgroup_to_cover_ok and self.cover_to_action_ok and not self.violations


@dataclass(frozen=True)
class RoundTripReport:
    results: tuple[RoundTripResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[RoundTripResult]:
        return [r for r in self.results if not r.passed]


def _round_trip(
    x: TwoComplex, t: CosetTable, position: int, max_cosets: int
) -> RoundTripResult:
    cover = build_cover(x, t)
    recovered = standardize_table(subgroup_of_cover(cover, max_cosets))
    forward = recovered == cover.subgroup_table
    rebuilt = build_cover(x, monodromy_action(cover))
    backward = rebuilt == cover
    return RoundTripResult(
        position=position,
        index=t.coset_count,
        subgroup_to_cover_ok=forward,
        cover_to_action_ok=backward,
        violations=tuple(validate_cover(cover)),
    )


def galois_roundtrip_check(
    x: TwoComplex,
    max_index: int,
    max_cosets: int = DEFAULT_MAX_COSETS,
    workers: int = 1,
) -> RoundTripReport:
    """
    For every subgroup of index at most ``max_index``: subgroup -> cover ->
    subgroup is the identity on standardized tables, and cover -> action ->
    cover rebuilds the same cover cell for cell.
    """
    group = _base_group(x)
    tables = low_index_subgroups(group.presentation, max_index, workers)
    logger.info(f"Checking {len(tables)} subgroups of index <= {max_index}")
    args = (
        [x] * len(tables),
        tables,
        list(range(len(tables))),
        [max_cosets] * len(tables),
    )
    if workers > 1 and len(tables) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_round_trip, *args))
    else:
        results = list(map(_round_trip, *args))
    return RoundTripReport(tuple(results))
