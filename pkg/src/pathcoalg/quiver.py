"""Quivers, paths and the graph algorithms the coalgebra questions reduce to."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple


class QuiverError(ValueError):
    pass


class QuiverSyntaxError(QuiverError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PathError(ValueError):
    pass


class InfiniteCondensation(ValueError):
    """Raised when infinitely many paths join two vertices of S avoiding S inside."""

    def __init__(self, cycle: "Path"):
        super().__init__(f"interior cycle {cycle} avoids the vertex set")
        self.cycle = cycle


class Arrow(NamedTuple):
    name: str
    source: str
    tail: str


@dataclass(frozen=True)
class Path:
    """A path in some quiver.

    ``vertices`` lists the visited vertices, so it has ``len(arrows) + 1``
    entries; a trivial path has no arrows and a single vertex.
    """

    arrows: tuple[str, ...]
    vertices: tuple[str, ...]

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def tail(self) -> str:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_cycle(self) -> bool:
        return bool(self.arrows) and self.source == self.tail

    def factor(self, i: int, j: int) -> "Path":
        """The subpath between split positions ``i <= j``."""
        return Path(self.arrows[i:j], self.vertices[i:j + 1])

    def prefix(self, i: int) -> "Path":
        return self.factor(0, i)

    def suffix(self, i: int) -> "Path":
        return self.factor(i, len(self.arrows))

    def splits(self) -> Iterator[tuple["Path", "Path"]]:
        n = len(self.arrows)
        for i in range(n + 1):
            yield self.factor(0, i), self.factor(i, n)

    def __str__(self):
        return ".".join(self.arrows) if self.arrows else self.vertices[0]

    def __repr__(self):
        return f"Path({self})"


def trivial(v: str) -> Path:
    return Path((), (v,))


def concat(p: Path, q: Path) -> Path:
    if p.tail != q.source:
        raise PathError(f"cannot concatenate {p} (ends at {p.tail}) with {q} (starts at {q.source})")
    return Path(p.arrows + q.arrows, p.vertices + q.vertices[1:])


def power(c: Path, n: int) -> Path:
    if n < 1:
        raise ValueError("power needs n >= 1")
    out = c
    for _ in range(n - 1):
        out = concat(out, c)
    return out


def subpaths(p: Path) -> set[Path]:
    n = len(p)
    return {p.factor(i, j) for i in range(n + 1) for j in range(i, n + 1)}


def is_subpath(q: Path, p: Path) -> bool:
    return occurrence_positions(q, p) != []


def occurrence_positions(q: Path, p: Path) -> list[int]:
    """Split indices at which ``q`` starts inside ``p``."""
    n, m = len(p), len(q)
    if m == 0:
        return [i for i, v in enumerate(p.vertices) if v == q.source]
    return [i for i in range(n - m + 1)
            if p.arrows[i:i + m] == q.arrows and p.vertices[i] == q.source]


def max_disjoint_occurrences(q: Path, p: Path) -> int:
    """Largest ``n`` with ``p = p1 q p2 q ... q p_{n+1}``.

    Greedy leftmost matching is optimal for disjoint factor occurrences.  A
    trivial ``q`` occurs at every split index visiting its vertex, and
    distinct indices count as disjoint.
    """
    m = len(q)
    count = 0
    nxt = 0
    for i in occurrence_positions(q, p):
        if i >= nxt:
            count += 1
            nxt = i + max(m, 1)
    return count


class Quiver:
    """A finite quiver with named vertices and arrows, in declaration order."""

    def __init__(self, vertices: Iterable[str] = (), arrows: Iterable[tuple[str, str, str]] = ()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: tuple[Arrow, ...] = tuple(Arrow(*a) for a in arrows)
        self._vindex = {}
        for i, v in enumerate(self.vertices):
            if v in self._vindex:
                raise QuiverError(f"duplicate vertex {v!r}")
            self._vindex[v] = i
        self._arrow = {}
        self._aindex = {}
        for i, a in enumerate(self.arrows):
            if a.name in self._arrow:
                raise QuiverError(f"duplicate arrow {a.name!r}")
            if a.name in self._vindex:
                raise QuiverError(f"identifier {a.name!r} names both a vertex and an arrow")
            for end in (a.source, a.tail):
                if end not in self._vindex:
                    raise QuiverError(f"arrow {a.name!r} uses undeclared vertex {end!r}")
            self._arrow[a.name] = a
            self._aindex[a.name] = i
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._out[a.source].append(a)
            self._in[a.tail].append(a)

    # identity and display

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{a.source}->{a.tail}" for a in self.arrows)
        return f"Quiver([{', '.join(self.vertices)}]; [{arrows}])"

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"arrow {a.name}: {a.source} -> {a.tail}" for a in self.arrows]
        return "\n".join(lines) + "\n"

    # lookups

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow

    def arrow(self, name: str) -> Arrow:
        return self._arrow[name]

    def out_arrows(self, v: str) -> list[Arrow]:
        return self._out[v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return self._in[v]

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def arrow_index(self, name: str) -> int:
        return self._aindex[name]

    # paths

    def path(self, *names: str) -> Path:
        """Build a path from arrow names, or a trivial path from one vertex name."""
        if len(names) == 1 and names[0] in self._vindex:
            return trivial(names[0])
        if not names:
            raise PathError("empty arrow sequence")
        verts = []
        for name in names:
            if name not in self._arrow:
                raise PathError(f"unknown arrow {name!r}")
            a = self._arrow[name]
            if verts and verts[-1] != a.source:
                raise PathError(f"arrow {name!r} starts at {a.source}, path is at {verts[-1]}")
            if not verts:
                verts.append(a.source)
            verts.append(a.tail)
        return Path(tuple(names), tuple(verts))

    def parse_path(self, text: str) -> Path:
        text = text.strip()
        if not text:
            raise PathError("empty path expression")
        return self.path(*[t.strip() for t in text.split(".")])

    def contains_path(self, p: Path) -> bool:
        if p.is_trivial:
            return p.source in self._vindex
        try:
            return self.path(*p.arrows) == p
        except PathError:
            return False

    def path_key(self, p: Path) -> tuple:
        """Global path order: length, source, tail, then the arrow word."""
        return (len(p.arrows), self._vindex[p.source], self._vindex[p.tail],
                tuple(self._aindex[a] for a in p.arrows))

    def tensor_key(self, pair: tuple[Path, Path]) -> tuple:
        return (self.path_key(pair[0]), self.path_key(pair[1]))

    def extend(self, p: Path) -> Iterator[Path]:
        for a in self._out[p.tail]:
            yield Path(p.arrows + (a.name,), p.vertices + (a.tail,))

    def paths_of_length(self, n: int) -> list[Path]:
        layer = [trivial(v) for v in self.vertices]
        for _ in range(n):
            layer = [q for p in layer for q in self.extend(p)]
        return sorted(layer, key=self.path_key)

    def paths_up_to(self, bound: int) -> list[Path]:
        out = []
        layer = [trivial(v) for v in self.vertices]
        for n in range(bound + 1):
            out.extend(layer)
            if n < bound:
                layer = [q for p in layer for q in self.extend(p)]
        return sorted(out, key=self.path_key)

    def count_paths_up_to(self, bound: int) -> int:
        counts = {v: 1 for v in self.vertices}
        total = len(self.vertices)
        for _ in range(bound):
            nxt = {v: 0 for v in self.vertices}
            for a in self.arrows:
                nxt[a.tail] += counts[a.source]
            counts = nxt
            total += sum(counts.values())
        return total

    # subquivers

    def subquiver(self, vertices: Iterable[str], arrows: Iterable[str]) -> "Quiver":
        vs = set(vertices)
        names = set(arrows)
        for v in vs:
            if v not in self._vindex:
                raise QuiverError(f"unknown vertex {v!r}")
        for n in names:
            if n not in self._arrow:
                raise QuiverError(f"unknown arrow {n!r}")
            a = self._arrow[n]
            if a.source not in vs or a.tail not in vs:
                raise QuiverError(f"arrow {n!r} leaves the chosen vertex set")
        return Quiver([v for v in self.vertices if v in vs],
                      [a for a in self.arrows if a.name in names])

    def full_subquiver(self, vertices: Iterable[str]) -> "Quiver":
        vs = set(vertices)
        return self.subquiver(vs, [a.name for a in self.arrows if a.source in vs and a.tail in vs])

    def is_acyclic(self) -> bool:
        return all(len(c) == 1 and not self._has_loop(c[0]) for c in strongly_connected_components(self))

    def _has_loop(self, v: str) -> bool:
        return any(a.tail == v for a in self._out[v])


_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_VERTEX_LINE = re.compile(rf"^vertex\s+({_IDENT})$")
_ARROW_LINE = re.compile(rf"^arrow\s+({_IDENT})\s*:\s*({_IDENT})\s*->\s*({_IDENT})$")


def parse_quiver_lines(lines: Iterable[tuple[int, str]]) -> Quiver:
    """Parse ``(line number, text)`` pairs already stripped of comments."""
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    seen: dict[str, int] = {}
    for lineno, raw in lines:
        text = raw.strip()
        col = len(raw) - len(raw.lstrip()) + 1
        if not text:
            continue
        m = _VERTEX_LINE.match(text)
        if m:
            name = m.group(1)
            if name in seen:
                raise QuiverSyntaxError(f"duplicate identifier {name!r}", lineno, col)
            seen[name] = lineno
            vertices.append(name)
            continue
        m = _ARROW_LINE.match(text)
        if m:
            name, s, t = m.groups()
            if name in seen:
                raise QuiverSyntaxError(f"duplicate identifier {name!r}", lineno, col)
            for end in (s, t):
                if end not in vertices:
                    where = raw.index(end, raw.index(":")) + 1
                    raise QuiverSyntaxError(f"undeclared endpoint vertex {end!r}", lineno, where)
            seen[name] = lineno
            arrows.append((name, s, t))
            continue
        raise QuiverSyntaxError(f"cannot parse {text!r}", lineno, col)
    return Quiver(vertices, arrows)


def strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_quiver(text: str) -> Quiver:
    return parse_quiver_lines((i, strip_comment(line)) for i, line in enumerate(text.splitlines(), 1))


# graph algorithms


def strongly_connected_components(G: Quiver) -> list[list[str]]:
    """Tarjan's algorithm, iterative.  Components come out in topological order
    (every arrow between distinct components points to a later one)."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comps: list[list[str]] = []
    counter = 0
    for root in G.vertices:
        if root in index:
            continue
        work = [(root, iter(G.out_arrows(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for a in it:
                w = a.tail
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(G.out_arrows(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp, key=G.vertex_index))
    comps.reverse()
    return comps


@dataclass
class Connectivity:
    strongly_connected: bool
    components: list[list[str]] = field(default_factory=list)

    def __bool__(self):
        return self.strongly_connected


def strongly_connected(G: Quiver) -> Connectivity:
    comps = strongly_connected_components(G)
    return Connectivity(len(comps) <= 1, comps)


def reachable(G: Quiver, a: str, b: str, within: set[str] | None = None) -> Path | None:
    """A shortest path from ``a`` to ``b``; ties go to earlier-declared arrows.

    ``within`` optionally restricts the interior vertices allowed.
    """
    if a == b:
        return trivial(a)
    parent: dict[str, tuple[str, str]] = {}
    seen = {a}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for arr in G.out_arrows(v):
            w = arr.tail
            if w in seen:
                continue
            if w != b and within is not None and w not in within:
                continue
            seen.add(w)
            parent[w] = (v, arr.name)
            if w == b:
                names = []
                while w != a:
                    w, name = parent[w]
                    names.append(name)
                return G.path(*reversed(names))
            queue.append(w)
    return None


def reachable_set(G: Quiver, a: str) -> set[str]:
    seen = {a}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for arr in G.out_arrows(v):
            if arr.tail not in seen:
                seen.add(arr.tail)
                queue.append(arr.tail)
    return seen


def connected_components(G: Quiver) -> list[list[str]]:
    seen: set[str] = set()
    comps = []
    for root in G.vertices:
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for a in G.out_arrows(v) + G.in_arrows(v):
                for w in (a.source, a.tail):
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
        seen |= comp
        comps.append(sorted(comp, key=G.vertex_index))
    return comps


def is_connected(G: Quiver) -> bool:
    return len(connected_components(G)) <= 1


def find_cycle_through(G: Quiver, v: str) -> Path | None:
    """Shortest nontrivial cycle at ``v``."""
    best = None
    for a in G.out_arrows(v):
        back = reachable(G, a.tail, v)
        if back is not None:
            c = concat(G.path(a.name), back)
            if best is None or G.path_key(c) < G.path_key(best):
                best = c
    return best


@dataclass
class CondensedQuiver:
    """The quiver on ``S`` whose arrows are ambient paths between S-vertices
    with every interior vertex outside ``S``.

    ``quiver`` uses the dotted ambient words as arrow identifiers; ``segment``
    maps each of them back to the ambient path.
    """

    ambient: Quiver
    S: tuple[str, ...]
    quiver: Quiver
    segment: dict[str, Path]

    def to_condensed(self, p: Path) -> Path:
        """Factor an ambient path with endpoints in S at its S-visits."""
        Sset = set(self.S)
        if p.source not in Sset or p.tail not in Sset:
            raise PathError(f"{p} does not start and end in S")
        if p.is_trivial:
            return trivial(p.source)
        names = []
        start = 0
        for i in range(1, len(p) + 1):
            if p.vertices[i] in Sset:
                seg = str(p.factor(start, i))
                if seg not in self.segment:
                    raise PathError(f"segment {seg} is not a condensed arrow")
                names.append(seg)
                start = i
        return self.quiver.path(*names)

    def to_ambient(self, p: Path) -> Path:
        if p.is_trivial:
            return trivial(p.source)
        out = self.segment[p.arrows[0]]
        for name in p.arrows[1:]:
            out = concat(out, self.segment[name])
        return out


def make_condensed(G: Quiver, S: Iterable[str], segments: Iterable[Path]) -> CondensedQuiver:
    Sset = set(S)
    order = tuple(v for v in G.vertices if v in Sset)
    segs = sorted(set(segments), key=G.path_key)
    Q = Quiver(order, [(str(p), p.source, p.tail) for p in segs])
    return CondensedQuiver(G, order, Q, {str(p): p for p in segs})


def condense(G: Quiver, S: Iterable[str]) -> CondensedQuiver:
    Sset = set(S)
    if not Sset:
        raise ValueError("condensation needs a nonempty vertex set")
    for v in Sset:
        if not G.has_vertex(v):
            raise QuiverError(f"unknown vertex {v!r}")
    # interior vertices reachable from S and co-reachable to S, avoiding S
    fwd: set[str] = set()
    queue = deque()
    for s in Sset:
        for a in G.out_arrows(s):
            if a.tail not in Sset and a.tail not in fwd:
                fwd.add(a.tail)
                queue.append(a.tail)
    while queue:
        v = queue.popleft()
        for a in G.out_arrows(v):
            if a.tail not in Sset and a.tail not in fwd:
                fwd.add(a.tail)
                queue.append(a.tail)
    bwd: set[str] = set()
    for s in Sset:
        for a in G.in_arrows(s):
            if a.source not in Sset and a.source not in bwd:
                bwd.add(a.source)
                queue.append(a.source)
    while queue:
        v = queue.popleft()
        for a in G.in_arrows(v):
            if a.source not in Sset and a.source not in bwd:
                bwd.add(a.source)
                queue.append(a.source)
    relevant = fwd & bwd
    core = G.subquiver(relevant, [a.name for a in G.arrows
                                  if a.source in relevant and a.tail in relevant])
    for comp in strongly_connected_components(core):
        if len(comp) > 1 or core._has_loop(comp[0]):
            raise InfiniteCondensation(find_cycle_through(core, comp[0]))
    segments = []

    def walk(p: Path):
        for a in G.out_arrows(p.tail):
            q = Path(p.arrows + (a.name,), p.vertices + (a.tail,))
            if a.tail in Sset:
                segments.append(q)
            elif a.tail in relevant:
                walk(q)

    for s in G.vertices:
        if s in Sset:
            walk(trivial(s))
    return make_condensed(G, Sset, segments)
