"""
Pointed combinatorial 2-complexes.

A face boundary is a closed edge path written as a sequence of edge steps,
encoded like word letters: edge e traversed forward is 2*e, backward 2*e + 1.
"""

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from galois_covers.config.logging import get_logger
from galois_covers.domain.exceptions import ComplexError
from galois_covers.domain.presentation import (
    Presentation,
    default_names,
    make_presentation,
)
from galois_covers.domain.words import Word, empty_word, reduce_word

logger = get_logger(__name__)


def step(edge: int, sign: int = 1) -> int:
    """Encode a signed edge."""
    return 2 * edge + (0 if sign == 1 else 1)


def step_sign(s: int) -> int:
    return -1 if s & 1 else 1


@dataclass(frozen=True)
class TwoComplex:
    """
    Domain value: a pointed combinatorial 2-complex.

    3-cells carry no attaching data; they only count towards the Euler
    characteristic.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    basepoint: int = 0
    cell3_count: int = 0
    name: str = field(default="", compare=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def step_source(self, s: int) -> int:
        src, dst = self.edges[s >> 1]
        return dst if s & 1 else src

    def step_target(self, s: int) -> int:
        src, dst = self.edges[s >> 1]
        return src if s & 1 else dst

    def incidences(self) -> list[list[tuple[int, int]]]:
        """
        Per vertex, the (step, other end) pairs leaving it: edges in index
        order, the forward orientation before the reverse one.
        """
        table: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e, (src, dst) in enumerate(self.edges):
            table[src].append((step(e, 1), dst))
            table[dst].append((step(e, -1), src))
        return table


def make_complex(
    vertex_count: int,
    edges: Iterable[tuple[int, int]],
    faces: Iterable[Sequence[int]] = (),
    basepoint: int = 0,
    cell3_count: int = 0,
    name: str = "",
) -> TwoComplex:
    """
    Build and validate a complex.

    Raises:
        ComplexError: listing every violated invariant.
    """
    x = TwoComplex(
        vertex_count,
        tuple((int(s), int(d)) for s, d in edges),
        tuple(tuple(f) for f in faces),
        basepoint,
        cell3_count,
        name,
    )
    violations = validate_complex(x)
    if violations:
        raise ComplexError(violations)
    return x


def validate_complex(x: TwoComplex) -> list[str]:
    """Every violated invariant, with cell indices; empty when valid."""
    violations: list[str] = []
    if x.vertex_count < 1:
        violations.append("complex has no vertices")
    if not 0 <= x.basepoint < max(x.vertex_count, 0):
        violations.append(f"basepoint {x.basepoint} out of range")
    if x.cell3_count < 0:
        violations.append("negative 3-cell count")
    bad_edges = set()
    for e, (src, dst) in enumerate(x.edges):
        if not (0 <= src < x.vertex_count and 0 <= dst < x.vertex_count):
            violations.append(f"edge {e} endpoint out of range")
            bad_edges.add(e)
    for f, boundary in enumerate(x.faces):
        if not boundary:
            violations.append(f"face {f} is empty")
            continue
        if any(not 0 <= (s >> 1) < x.edge_count for s in boundary):
            violations.append(f"face {f} uses an edge out of range")
            continue
        if any((s >> 1) in bad_edges for s in boundary):
            continue
        closed = all(
            x.step_target(boundary[i]) == x.step_source(boundary[(i + 1) % len(boundary)])
            for i in range(len(boundary))
        )
        if not closed:
            violations.append(f"face {f} not closed")
    return violations


def euler_characteristic(x: TwoComplex) -> int:
    return x.vertex_count - x.edge_count + x.face_count - x.cell3_count


@dataclass(frozen=True)
class SpanningTree:
    """
    Breadth-first spanning tree of the basepoint component.

    ``parent[v]`` is (parent vertex, step from parent to v); ``order`` lists
    the component's vertices in discovery order.
    """

    tree_edges: frozenset[int]
    parent: dict[int, tuple[int, int]]
    order: tuple[int, ...]


def spanning_tree(x: TwoComplex) -> SpanningTree:
    incidences = x.incidences()
    order = [x.basepoint]
    parent: dict[int, tuple[int, int]] = {}
    seen = {x.basepoint}
    queue = deque([x.basepoint])
    while queue:
        v = queue.popleft()
        for s, w in incidences[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = (v, s)
                order.append(w)
                queue.append(w)
    tree_edges = frozenset(s >> 1 for _, s in parent.values())
    return SpanningTree(tree_edges, parent, tuple(order))


def tree_path(tree: SpanningTree, v: int) -> list[int]:
    """Edge steps of the tree path from the basepoint to v."""
    steps: list[int] = []
    while v in tree.parent:
        v, s = tree.parent[v]
        steps.append(s)
    steps.reverse()
    return steps


def reverse_path(steps: Sequence[int]) -> list[int]:
    return [s ^ 1 for s in reversed(steps)]


def is_connected(x: TwoComplex) -> bool:
    return len(spanning_tree(x).order) == x.vertex_count


def _component_cells(x: TwoComplex, tree: SpanningTree) -> tuple[list[int], list[int]]:
    inside = set(tree.order)
    edges = [e for e, (src, _) in enumerate(x.edges) if src in inside]
    faces = [f for f, b in enumerate(x.faces) if x.step_source(b[0]) in inside]
    return edges, faces


@dataclass(frozen=True)
class FundamentalGroupData:
    """A presentation of pi1 and the word labelling every component edge."""

    presentation: Presentation
    edge_labels: dict[int, Word]
    tree: SpanningTree

    def path_word(self, steps: Iterable[int]) -> Word:
        """The pi1 word of an edge path, read through the edge labels."""
        k = self.presentation.generator_count
        letters: list[int] = []
        for s in steps:
            label = self.edge_labels[s >> 1]
            letters.extend(label.letters if not s & 1 else label.inverse().letters)
        return reduce_word(letters, k)


def fundamental_group_presentation(x: TwoComplex) -> FundamentalGroupData:
    """
    Contract a spanning tree: one generator per non-tree edge of the
    basepoint component, one relator per face there.
    """
    tree = spanning_tree(x)
    edges, faces = _component_cells(x, tree)
    if len(tree.order) != x.vertex_count:
        logger.warning(
            "Ignoring %d vertices outside the basepoint component",
            x.vertex_count - len(tree.order),
        )
    generators = [e for e in edges if e not in tree.tree_edges]
    k = len(generators)
    labels: dict[int, Word] = {e: empty_word(k) for e in edges}
    for g, e in enumerate(generators):
        labels[e] = reduce_word((2 * g,), k)

    names = default_names(k)
    partial = FundamentalGroupData(make_presentation(names, []), labels, tree)
    relators = [partial.path_word(x.faces[f]) for f in faces]
    return FundamentalGroupData(make_presentation(names, relators), labels, tree)


def basepoint_component(x: TwoComplex) -> TwoComplex:
    """
    The cells reachable from the basepoint, vertices renumbered in
    breadth-first order; edges and faces keep their relative order.
    """
    tree = spanning_tree(x)
    edges, faces = _component_cells(x, tree)
    vertex_index = {v: i for i, v in enumerate(tree.order)}
    edge_index = {e: i for i, e in enumerate(edges)}
    return TwoComplex(
        vertex_count=len(tree.order),
        edges=tuple((vertex_index[x.edges[e][0]], vertex_index[x.edges[e][1]]) for e in edges),
        faces=tuple(
            tuple(step(edge_index[s >> 1], step_sign(s)) for s in x.faces[f])
            for f in faces
        ),
        basepoint=0,
        cell3_count=x.cell3_count,
        name=x.name,
    )


def presentation_complex(p: Presentation, name: str = "") -> TwoComplex:
    """One vertex, a loop edge per generator, a face per relator."""
    return TwoComplex(
        vertex_count=1,
        edges=tuple((0, 0) for _ in range(p.generator_count)),
        faces=tuple(r.letters for r in p.relators),
        basepoint=0,
        cell3_count=0,
        name=name,
    )
