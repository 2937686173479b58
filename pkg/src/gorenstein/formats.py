"""Line-based text formats for algebras and modules.

Algebra files, in this order (``#`` starts a comment)::

    field p=2
    vertices 3
    arrow a1 1 2
    relation a1 a2          # traverse a1, then a2

or ``nakayama cyclic <n>`` in place of the vertices/arrow/relation lines.

Module files::

    module P1
    dim 1 1 0
    map a1 1                # rows separated by ';', entries by spaces
    map a2 zero

or one or more of ``simple <i>``, ``proj <i>``, ``inj <i>`` (summed).
Omitted maps are zero.
"""

from __future__ import annotations

import numpy as np

from .algebra import (
    InfiniteDimensional,
    MonomialAlgebra,
    Quiver,
    build_monomial_algebra,
    cyclic_nakayama,
    indecomposable_injective,
    indecomposable_projective,
)
from .fieldmat import FieldSpec
from .rep import Representation, check_module, direct_sum, simple

__all__ = ["ParseError", "parse_algebra_file", "parse_module_file", "format_algebra", "format_module"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield number, body.split()


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


_SECTIONS = {"field": 0, "nakayama": 1, "vertices": 1, "arrow": 2, "relation": 3}


def parse_algebra_file(text: str, *, prime: int | None = None) -> MonomialAlgebra:
    """Parse an algebra description; ``prime`` overrides the ``field`` line."""
    p, vertex_count, cyclic = 2, None, None
    arrows, relations = [], []
    stage = -1
    for line, tokens in _lines(text):
        key = tokens[0]
        if key not in _SECTIONS:
            raise ParseError(f"unknown directive {key!r}", line)
        if _SECTIONS[key] < stage:
            raise ParseError(f"{key!r} is out of order (expected field, vertices, arrow, relation)", line)
        stage = _SECTIONS[key]
        if key == "field":
            if len(tokens) != 2 or not tokens[1].startswith("p="):
                raise ParseError("expected 'field p=<prime>'", line)
            p = _int(tokens[1][2:], line, "field modulus")
            try:
                FieldSpec(p)
            except ValueError as exc:
                raise ParseError(str(exc), line) from None
        elif key == "nakayama":
            if len(tokens) != 3 or tokens[1] != "cyclic":
                raise ParseError("expected 'nakayama cyclic <n>'", line)
            if vertex_count is not None or cyclic is not None:
                raise ParseError("vertices declared twice", line)
            cyclic = _int(tokens[2], line, "vertex count")
            if cyclic < 2:
                raise ParseError(f"the cyclic algebra needs n >= 2 vertices, got {cyclic}", line)
            stage = len(_SECTIONS)  # nothing may follow
        elif key == "vertices":
            if len(tokens) != 2:
                raise ParseError("expected 'vertices <n>'", line)
            if vertex_count is not None:
                raise ParseError("vertices declared twice", line)
            vertex_count = _int(tokens[1], line, "vertex count")
            if vertex_count < 1:
                raise ParseError("an algebra needs at least one vertex", line)
        elif key == "arrow":
            if vertex_count is None:
                raise ParseError("arrow before vertices", line)
            if len(tokens) != 4:
                raise ParseError("expected 'arrow <name> <source> <target>'", line)
            name, s, t = tokens[1], _int(tokens[2], line, "source"), _int(tokens[3], line, "target")
            if any(a[0] == name for a in arrows):
                raise ParseError(f"duplicate arrow name {name!r}", line)
            for v in (s, t):
                if not 1 <= v <= vertex_count:
                    raise ParseError(f"vertex {v} outside 1..{vertex_count}", line)
            arrows.append((name, s, t))
        else:
            if len(tokens) < 3:
                raise ParseError("a relation needs at least two arrows", line)
            names = {a[0]: a for a in arrows}
            rel = tokens[1:]
            for a in rel:
                if a not in names:
                    raise ParseError(f"relation uses unknown arrow {a!r}", line)
            for a, b in zip(rel, rel[1:]):
                if names[a][2] != names[b][1]:
                    raise ParseError(
                        f"relation is not composable: {a} ends at {names[a][2]} but {b} starts at {names[b][1]}",
                        line)
            relations.append(tuple(rel))
    if prime is not None:
        p = prime
    field = FieldSpec(p)
    if cyclic is not None:
        return cyclic_nakayama(cyclic, field)
    if vertex_count is None:
        raise ParseError("missing 'vertices' or 'nakayama cyclic' line")
    try:
        return build_monomial_algebra(field, Quiver(vertex_count, arrows), relations)
    except InfiniteDimensional:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parse_rows(spec: str, rows: int, cols: int, p: int, line: int, arrow: str) -> np.ndarray:
    if spec.strip() == "zero":
        return np.zeros((rows, cols), dtype=np.int64)
    parts = [r.split() for r in spec.split(";")]
    if len(parts) != rows or any(len(r) != cols for r in parts):
        shape = f"{len(parts)}x{'/'.join(str(len(r)) for r in parts)}"
        raise ParseError(f"map {arrow} must be {rows}x{cols} (target x source), got {shape}", line)
    try:
        return np.array([[int(x) for x in r] for r in parts], dtype=np.int64) % p
    except ValueError:
        raise ParseError(f"map {arrow} has a non-integer entry", line) from None


_BUILTINS = {"simple": simple, "proj": indecomposable_projective, "inj": indecomposable_injective}


def parse_module_file(text: str, A: MonomialAlgebra) -> Representation:
    name, dims, maps, builtins = "", None, {}, []
    map_lines = {}
    for line, tokens in _lines(text):
        key = tokens[0]
        if key == "module":
            name = " ".join(tokens[1:])
        elif key == "dim":
            if dims is not None:
                raise ParseError("dim declared twice", line)
            dims = [_int(t, line, "dimension") for t in tokens[1:]]
            if len(dims) != A.vertex_count or any(d < 0 for d in dims):
                raise ParseError(f"dim needs {A.vertex_count} nonnegative entries", line)
        elif key == "map":
            if dims is None:
                raise ParseError("map before dim", line)
            if len(tokens) < 3:
                raise ParseError("expected 'map <arrow> <rows>' or 'map <arrow> zero'", line)
            arrow = tokens[1]
            if arrow not in A.quiver.arrow:
                raise ParseError(f"unknown arrow {arrow!r}", line)
            if arrow in maps:
                raise ParseError(f"map {arrow} given twice", line)
            a = A.quiver.arrow[arrow]
            rows, cols = dims[a.target - 1], dims[a.source - 1]
            maps[arrow] = _parse_rows(" ".join(tokens[2:]), rows, cols, A.p, line, arrow)
            map_lines[arrow] = line
        elif key in _BUILTINS:
            if len(tokens) != 2:
                raise ParseError(f"expected '{key} <vertex>'", line)
            v = _int(tokens[1], line, "vertex")
            if not 1 <= v <= A.vertex_count:
                raise ParseError(f"vertex {v} outside 1..{A.vertex_count}", line)
            builtins.append(_BUILTINS[key](A, v))
        else:
            raise ParseError(f"unknown directive {key!r}", line)
    if builtins and (dims is not None or maps):
        raise ParseError("builtin modules cannot be mixed with explicit dim/map lines")
    if builtins:
        M = builtins[0] if len(builtins) == 1 else direct_sum(builtins).module
        return Representation(A, M.dims, M.maps, name=name or " + ".join(B.name for B in builtins))
    if dims is None:
        raise ParseError("missing 'dim' line or builtin module")
    M = Representation(A, dims, maps, name=name)
    bad = check_module(M)
    if bad is not None:
        lines = [map_lines[a] for a in bad.relation if a in map_lines]
        raise ParseError(str(bad), max(lines) if lines else None)
    return M


def format_algebra(A: MonomialAlgebra) -> str:
    out = [f"field p={A.p}", f"vertices {A.vertex_count}"]
    out += [f"arrow {a.name} {a.source} {a.target}" for a in A.quiver.arrows]
    out += ["relation " + " ".join(r) for r in A.relations]
    return "\n".join(out) + "\n"


def format_module(M: Representation) -> str:
    out = []
    if M.name:
        out.append(f"module {M.name}")
    out.append("dim " + " ".join(str(d) for d in M.dims))
    for a in M.algebra.quiver.arrows:
        m = M.maps[a.name]
        if m.size == 0 or not m.any():
            out.append(f"map {a.name} zero")
        else:
            out.append(f"map {a.name} " + " ; ".join(" ".join(str(int(x)) for x in row) for row in m))
    return "\n".join(out) + "\n"
