"""
Projection files: the cell maps of a cover, one line per total cell.

    vmap <total-v> <base-v>
    emap <total-e> <base-e>
    fmap <total-f> <base-f>
"""

from galois_covers.domain.cover import Projection
from galois_covers.domain.exceptions import ParseError


def serialize_projection(projection: Projection) -> str:
    lines: list[str] = []
    for keyword, mapping in (
        ("vmap", projection.vertex_map),
        ("emap", projection.edge_map),
        ("fmap", projection.face_map),
    ):
        lines.extend(f"{keyword} {i} {b}" for i, b in enumerate(mapping))
    return "\n".join(lines) + "\n"


def parse_projection_text(text: str) -> Projection:
    """
    Raises:
        ParseError: unknown keyword, non-integer field, or a cell listed out of order.
    """
    maps: dict[str, list[int]] = {"vmap": [], "emap": [], "fmap": []}
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        if fields[0] not in maps or len(fields) != 3:
            raise ParseError("expected '<vmap|emap|fmap> <total> <base>'", number)
        try:
            total, base = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError("cell ids must be integers", number) from None
        target = maps[fields[0]]
        if total != len(target):
            raise ParseError(f"{fields[0]} {total} out of order, expected {len(target)}", number)
        target.append(base)
    return Projection(tuple(maps["vmap"]), tuple(maps["emap"]), tuple(maps["fmap"]))
