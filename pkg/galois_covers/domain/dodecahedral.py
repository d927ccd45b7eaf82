"""
Dodecahedral spaces: the solid dodecahedron with every face glued to the
opposite face.

The gluing of the face with centre c is v -> -R(c, twist * 72deg) v, the
antipodal map followed by ``twist`` fifth-turns about the face axis. Vertex and
edge classes of the quotient are found with a union-find over the 20 vertices
and the 60 directed boundary edges.
"""

from collections.abc import Iterable
from itertools import product
from typing import Generic, TypeVar

import numpy as np
import numpy.typing as npt

from galois_covers.config.logging import get_logger
from galois_covers.domain.complex import TwoComplex, make_complex, step
from galois_covers.domain.exceptions import ComplexError

logger = get_logger(__name__)

PHI = (1 + np.sqrt(5)) / 2

ATOL = 1e-9

T = TypeVar("T", int, tuple[int, int])

FloatArray = npt.NDArray[np.float64]


class UnionFind(Generic[T]):
    """Union-find whose representative is always the smallest member."""

    def __init__(self, items: Iterable[T]):
        self.parent: dict[T, T] = {x: x for x in items}

    def find(self, x: T) -> T:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: T, y: T) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if y < x:
            x, y = y, x
        self.parent[y] = x

    def classes(self) -> dict[T, list[T]]:
        """Members per representative, both in sorted order."""
        result: dict[T, list[T]] = {}
        for x in sorted(self.parent):
            result.setdefault(self.find(x), []).append(x)
        return result


def dodecahedron_vertices() -> FloatArray:
    """The 20 vertices: (+-1, +-1, +-1) and cyclic shifts of (0, +-1/phi, +-phi)."""
    points = [list(p) for p in product((-1.0, 1.0), repeat=3)]
    for s, t in product((-1.0, 1.0), repeat=2):
        points.append([0.0, s / PHI, t * PHI])
        points.append([s / PHI, t * PHI, 0.0])
        points.append([t * PHI, 0.0, s / PHI])
    return np.array(points)


def face_centres() -> FloatArray:
    """Unit normals of the 12 faces, the cyclic shifts of (+-1, 0, +-phi)."""
    centres = []
    for s, t in product((-1.0, 1.0), repeat=2):
        centres.append([s, 0.0, t * PHI])
        centres.append([0.0, s * PHI, t])
        centres.append([s * PHI, t, 0.0])
    array = np.array(centres)
    return array / np.linalg.norm(array, axis=1, keepdims=True)


def rotation(axis: FloatArray, angle: float) -> FloatArray:
    """Right-handed rotation about a unit axis (Rodrigues)."""
    cross = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return (
        np.cos(angle) * np.eye(3)
        + np.sin(angle) * cross
        + (1 - np.cos(angle)) * np.outer(axis, axis)
    )


def face_cycle(vertices: FloatArray, centre: FloatArray) -> list[int]:
    """The five vertices of the face with this centre, counterclockwise about it."""
    heights = vertices @ centre
    members = np.flatnonzero(np.isclose(heights, heights.max(), atol=ATOL))
    if len(members) != 5:
        raise ComplexError([f"face with centre {centre} has {len(members)} vertices"])
    first = vertices[members[0]] - heights[members[0]] * centre
    e1 = first / np.linalg.norm(first)
    e2 = np.cross(centre, e1)
    angles = np.arctan2(vertices[members] @ e2, vertices[members] @ e1)
    return [int(members[i]) for i in np.argsort(angles, kind="stable")]


def _nearest(vertices: FloatArray, point: FloatArray) -> int:
    distances = np.linalg.norm(vertices - point, axis=1)
    index = int(np.argmin(distances))
    if distances[index] > 1e-6:
        raise ComplexError([f"gluing sends a vertex to {point}, not a vertex"])
    return index


def _is_positive(centre: FloatArray) -> bool:
    for coordinate in centre:
        if abs(coordinate) > ATOL:
            return bool(coordinate > 0)
    return False


def dodecahedral_space(twist: int) -> TwoComplex:
    """
    The quotient 2-complex of the dodecahedron glued with ``twist``
    fifth-turns, with a single 3-cell.

    Edge orientations follow the smallest directed edge (by original vertex
    numbers) of each class; faces are the ones with positive centre, one per
    opposite pair.

    Raises:
        ComplexError: an edge is glued to itself reversed.
    """
    if not 0 <= twist < 5:
        raise ComplexError([f"twist {twist} out of range 0..4"])
    vertices = dodecahedron_vertices()
    centres = face_centres()
    cycles = [face_cycle(vertices, c) for c in centres]

    directed = [
        (cycle[i], cycle[(i + 1) % 5])
        for cycle in cycles
        for i in range(5)
    ]
    vertex_classes: UnionFind[int] = UnionFind(range(len(vertices)))
    edge_classes: UnionFind[tuple[int, int]] = UnionFind(
        directed + [(b, a) for a, b in directed]
    )

    angle = twist * 2 * np.pi / 5
    for centre, cycle in zip(centres, cycles, strict=True):
        glue = -rotation(centre, angle)
        image = {v: _nearest(vertices, glue @ vertices[v]) for v in cycle}
        for v in cycle:
            vertex_classes.union(v, image[v])
        for i in range(5):
            a, b = cycle[i], cycle[(i + 1) % 5]
            edge_classes.union((a, b), (image[a], image[b]))
            edge_classes.union((b, a), (image[b], image[a]))

    vertex_index = {
        rep: i for i, rep in enumerate(vertex_classes.classes())
    }
    pairs: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]] = {}
    for rep in edge_classes.classes():
        reverse = edge_classes.find((rep[1], rep[0]))
        if reverse == rep:
            raise ComplexError([f"edge class of {rep} is glued to its reverse"])
        forward = min(rep, reverse)
        pairs[forward] = (forward, max(rep, reverse))

    edges: list[tuple[int, int]] = []
    step_of_class: dict[tuple[int, int], int] = {}
    for e, (forward, backward) in enumerate(sorted(pairs.values())):
        a, b = forward
        edges.append(
            (vertex_index[vertex_classes.find(a)], vertex_index[vertex_classes.find(b)])
        )
        step_of_class[forward] = step(e, 1)
        step_of_class[backward] = step(e, -1)

    faces = [
        [step_of_class[edge_classes.find((cycle[i], cycle[(i + 1) % 5]))] for i in range(5)]
        for centre, cycle in zip(centres, cycles, strict=True)
        if _is_positive(centre)
    ]
    logger.debug(
        "Twist %d: %d vertex classes, %d edge classes", twist, len(vertex_index), len(edges)
    )
    return make_complex(
        len(vertex_index),
        edges,
        faces,
        basepoint=0,
        cell3_count=1,
        name=f"dodecahedral-{twist}",
    )


def homology_sphere() -> TwoComplex:
    """
    The dodecahedral space whose quotient has 5 vertices and 10 edges
    (vertex classes of 4, edge classes of 3): the first such twist in 1..4.
    """
    for twist in range(1, 5):
        try:
            x = dodecahedral_space(twist)
        except ComplexError:
            continue
        if x.vertex_count == 5 and x.edge_count == 10:
            logger.debug(f"Homology sphere found at twist {twist}")
            return TwoComplex(
                x.vertex_count, x.edges, x.faces, x.basepoint, x.cell3_count,
                name="dodecahedral",
            )
    raise ComplexError(["no twist gives 5 vertex and 10 edge classes"])
