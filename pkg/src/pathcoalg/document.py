"""Element expressions and subcoalgebra specification files.

A specification file is a quiver document followed by declarations::

    element alpha = 1*x.y + 1*x.t + 1*z.y + 1*z.t
    subcoalgebra D = closure(alpha)
    subcoalgebra F = pathsub(a, b; x, z)
    subcoalgebra T = truncate(2)
    subcoalgebra P = cyclepowers(x.y.z)
    subcoalgebra W = wedge(A, B)

An element is ``term ('+' term)*`` with ``term = <rational>*<path>``; the
coefficient may be omitted, meaning 1.  Paths are dot-joined arrow names or a
single vertex name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dfield

from .coalg import (CyclePowers, FiniteDim, NotASubcoalgebra, PathSub, Subcoalgebra, TruncatedPC,
                    closure, wedge)
from .pathspace import Vector
from .quiver import PathError, Quiver, QuiverError, QuiverSyntaxError, parse_quiver_lines, strip_comment
from .scalars import QQ, Field


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


_TERM = re.compile(r"^\s*(?:([+-]?\d+(?:\s*/\s*\d+)?)\s*\*\s*)?([A-Za-z_][A-Za-z0-9_.]*)\s*$")


def parse_element(text: str, quiver: Quiver, field: Field = QQ) -> Vector:
    text = text.strip()
    if text == "0":
        return Vector()
    terms = []
    for chunk in text.split("+"):
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk.strip()!r}")
        coef = field.parse(m.group(1)) if m.group(1) else field.one
        terms.append((quiver.parse_path(m.group(2)), coef))
    return Vector(terms)


def format_element(v: Vector, quiver: Quiver, field: Field = QQ) -> str:
    if not v:
        return "0"
    ps = sorted(v, key=quiver.path_key)
    return " + ".join(f"{field.format(v[p])}*{p}" for p in ps)


def format_tensor(t: Vector, quiver: Quiver, field: Field = QQ) -> str:
    if not t:
        return "0"
    pairs = sorted(t, key=quiver.tensor_key)
    return " + ".join(f"{field.format(t[pq])}*{pq[0]}(x){pq[1]}" for pq in pairs)


@dataclass
class Document:
    quiver: Quiver
    field: Field
    elements: dict[str, Vector] = dfield(default_factory=dict)
    subcoalgebras: dict[str, Subcoalgebra] = dfield(default_factory=dict)

    def get(self, name: str | None = None) -> Subcoalgebra:
        if name is None:
            if not self.subcoalgebras:
                raise KeyError("the file declares no subcoalgebra")
            return list(self.subcoalgebras.values())[-1]
        if name not in self.subcoalgebras:
            raise KeyError(f"no subcoalgebra named {name!r}")
        return self.subcoalgebras[name]


_ELEMENT = re.compile(r"^element\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$")
_SUBCOALG = re.compile(r"^subcoalgebra\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*([a-z]+)\s*\((.*)\)\s*$")


def _names(arg: str) -> list[str]:
    return [s.strip() for s in arg.split(",") if s.strip()]


def _build(kind: str, arg: str, doc: Document) -> Subcoalgebra:
    G, F = doc.quiver, doc.field
    if kind == "closure":
        gens = []
        for n in _names(arg):
            if n not in doc.elements:
                raise ValueError(f"unknown element {n!r}")
            gens.append(doc.elements[n])
        return closure(gens, G, F)
    if kind == "pathsub":
        if ";" not in arg:
            raise ValueError("pathsub needs '<vertices>; <arrows>'")
        vs, es = arg.split(";", 1)
        return PathSub(G, _names(vs), _names(es), F)
    if kind == "truncate":
        return TruncatedPC(G, int(arg.strip()), F)
    if kind == "cyclepowers":
        return CyclePowers(G, G.parse_path(arg), F)
    if kind == "wedge":
        names = _names(arg)
        if len(names) != 2:
            raise ValueError("wedge takes two subcoalgebra names")
        parts = []
        for n in names:
            if n not in doc.subcoalgebras:
                raise ValueError(f"unknown subcoalgebra {n!r}")
            D = doc.subcoalgebras[n]
            parts.append(D if isinstance(D, FiniteDim) else D.to_finite())
        return wedge(*parts)
    raise ValueError(f"unknown construction {kind!r}")


def parse_document(text: str, field: Field = QQ) -> Document:
    quiver_lines = []
    decls = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = strip_comment(raw)
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(("element", "subcoalgebra")):
            decls.append((lineno, line))
        elif decls:
            col = len(line) - len(line.lstrip()) + 1
            raise DocumentError("quiver declarations must precede elements and subcoalgebras", lineno, col)
        else:
            quiver_lines.append((lineno, line))
    try:
        G = parse_quiver_lines(quiver_lines)
    except QuiverSyntaxError as e:
        raise DocumentError(str(e).split(": ", 1)[1], e.line, e.column) from e
    doc = Document(G, field)
    for lineno, line in decls:
        col = len(line) - len(line.lstrip()) + 1
        stripped = line.strip()
        m = _ELEMENT.match(stripped)
        if m:
            name, expr = m.groups()
            if name in doc.elements or name in doc.subcoalgebras:
                raise DocumentError(f"duplicate name {name!r}", lineno, col)
            try:
                doc.elements[name] = parse_element(expr, G, field)
            except (ValueError, PathError) as e:
                raise DocumentError(str(e), lineno, col + stripped.index("=") + 1) from e
            continue
        m = _SUBCOALG.match(stripped)
        if m:
            name, kind, arg = m.groups()
            if name in doc.elements or name in doc.subcoalgebras:
                raise DocumentError(f"duplicate name {name!r}", lineno, col)
            try:
                doc.subcoalgebras[name] = _build(kind, arg, doc)
            except (ValueError, PathError, QuiverError, NotASubcoalgebra) as e:
                raise DocumentError(str(e), lineno, col + stripped.index("=") + 1) from e
            continue
        raise DocumentError(f"cannot parse {stripped!r}", lineno, col)
    return doc
