"""
Line-oriented complex files.

    complex torus            # optional header
    vertices 1
    edge 0 0 0
    edge 1 0 0
    face 0 +0 +1 -0 -1
    cell3 0                  # optional, default 0
    basepoint 0

Fields are whitespace-separated; ``#`` starts a comment. Edge and face ids
must run 0, 1, 2, ... in order.
"""

from galois_covers.domain.complex import TwoComplex, make_complex, step
from galois_covers.domain.exceptions import ParseError


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


def _signed_edge(token: str, line: int) -> int:
    if len(token) < 2 or token[0] not in "+-":
        raise ParseError(f"signed edge must look like +k or -k, got {token!r}", line)
    e = _int(token[1:], line, "edge id")
    if e < 0:
        raise ParseError(f"edge id must be nonnegative, got {token!r}", line)
    return step(e, 1 if token[0] == "+" else -1)


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            lines.append((number, fields))
    return lines


def parse_complex_text(text: str) -> TwoComplex:
    """
    Parse and validate a complex file.

    Raises:
        ParseError: a malformed line, with its line number.
        ComplexError: the complex violates an invariant.
    """
    name = ""
    vertex_count: int | None = None
    basepoint: int | None = None
    cell3_count = 0
    edges: list[tuple[int, int]] = []
    faces: list[list[int]] = []
    seen: set[str] = set()

    for line, fields in _content_lines(text):
        keyword, args = fields[0], fields[1:]
        if keyword in ("complex", "vertices", "cell3", "basepoint"):
            if keyword in seen:
                raise ParseError(f"duplicate '{keyword}' line", line)
            seen.add(keyword)

        if keyword == "complex":
            if len(args) != 1:
                raise ParseError("expected 'complex <name>'", line)
            name = args[0]
        elif keyword == "vertices":
            if len(args) != 1:
                raise ParseError("expected 'vertices <count>'", line)
            vertex_count = _int(args[0], line, "vertex count")
        elif keyword == "edge":
            if len(args) != 3:
                raise ParseError("expected 'edge <id> <src> <dst>'", line)
            edge_id = _int(args[0], line, "edge id")
            if edge_id != len(edges):
                raise ParseError(f"edge id {edge_id} out of order, expected {len(edges)}", line)
            edges.append((_int(args[1], line, "source"), _int(args[2], line, "target")))
        elif keyword == "face":
            if len(args) < 2:
                raise ParseError("expected 'face <id> <signed-edge> ...'", line)
            face_id = _int(args[0], line, "face id")
            if face_id != len(faces):
                raise ParseError(f"face id {face_id} out of order, expected {len(faces)}", line)
            faces.append([_signed_edge(token, line) for token in args[1:]])
        elif keyword == "cell3":
            if len(args) != 1:
                raise ParseError("expected 'cell3 <count>'", line)
            cell3_count = _int(args[0], line, "3-cell count")
        elif keyword == "basepoint":
            if len(args) != 1:
                raise ParseError("expected 'basepoint <vertex-id>'", line)
            basepoint = _int(args[0], line, "basepoint")
        else:
            raise ParseError(f"unknown directive {keyword!r}", line)

    if vertex_count is None:
        raise ParseError("missing 'vertices' line")
    if basepoint is None:
        raise ParseError("missing 'basepoint' line")
    return make_complex(vertex_count, edges, faces, basepoint, cell3_count, name)


def _signed_token(s: int) -> str:
    return f"{'-' if s & 1 else '+'}{s >> 1}"


def serialize_complex(x: TwoComplex) -> str:
    lines: list[str] = []
    if x.name:
        lines.append(f"complex {x.name}")
    lines.append(f"vertices {x.vertex_count}")
    lines.extend(f"edge {e} {src} {dst}" for e, (src, dst) in enumerate(x.edges))
    lines.extend(
        f"face {f} " + " ".join(_signed_token(s) for s in boundary)
        for f, boundary in enumerate(x.faces)
    )
    if x.cell3_count:
        lines.append(f"cell3 {x.cell3_count}")
    lines.append(f"basepoint {x.basepoint}")
    return "\n".join(lines) + "\n"
