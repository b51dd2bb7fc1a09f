"""The path coalgebra: comultiplication, hit actions, subcoalgebras, wedges.

A path ``p = x1...xn`` comultiplies to the sum of ``p[:i] (x) p[i:]`` over all
split positions ``0 <= i <= n``, the end splits contributing
``s(p) (x) p`` and ``p (x) t(p)``.  Vertices are grouplike.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .pathspace import Subspace, Vector, kernel, tensor
from .quiver import Path, PathError, Quiver, concat, power, trivial
from .scalars import QQ, Field


class NotASubcoalgebra(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


class CrossCheckFailure(RuntimeError):
    """An internal certificate did not hold; indicates a bug, not bad input."""


# elementwise structure


def delta(d: Vector) -> Vector:
    out: dict = {}
    for p, c in d.items():
        for pair in p.splits():
            s = out.get(pair, 0) + c
            if s:
                out[pair] = s
            else:
                out.pop(pair, None)
    return Vector._raw(out)


def counit(d: Vector, field: Field = QQ):
    total = field.zero
    for p, c in d.items():
        if p.is_trivial:
            total = total + c
    return total


@dataclass(frozen=True)
class PathFunctional:
    """The dual-basis functional of a single path: 1 on ``path``, 0 elsewhere."""

    path: Path

    def __call__(self, d: Vector):
        return d[self.path]


def dual(p: Path) -> PathFunctional:
    return PathFunctional(p)


def _as_path(f) -> Path:
    return f.path if isinstance(f, PathFunctional) else f


def hit_right(d: Vector, f) -> Vector:
    """``d . p*``: keep the support paths that start with ``p`` and strip that prefix."""
    p = _as_path(f)
    m = len(p)
    out = {}
    for q, c in d.items():
        if q.source != p.source or len(q) < m or q.arrows[:m] != p.arrows:
            continue
        r = q.suffix(m)
        out[r] = out.get(r, 0) + c
    return Vector(out)


def hit_left(f, d: Vector) -> Vector:
    """``p* . d``: keep the support paths that end with ``p`` and strip that suffix."""
    p = _as_path(f)
    m = len(p)
    out = {}
    for q, c in d.items():
        n = len(q)
        if q.tail != p.tail or n < m or q.arrows[n - m:] != p.arrows:
            continue
        r = q.prefix(n - m)
        out[r] = out.get(r, 0) + c
    return Vector(out)


def convolve(f: Vector, g: Vector, bound: int) -> Vector:
    """Convolution product of two functionals in dual-basis coordinates,
    truncated to paths of length at most ``bound``."""
    by_source = defaultdict(list)
    for q, b in g.items():
        by_source[q.source].append((q, b))
    out: dict = {}
    for p, a in f.items():
        for q, b in by_source.get(p.tail, ()):
            if len(p) + len(q) > bound:
                continue
            pq = concat(p, q)
            s = out.get(pq, 0) + a * b
            if s:
                out[pq] = s
            else:
                out.pop(pq, None)
    return Vector._raw(out)


def homogeneous_components(d: Vector, quiver: Quiver) -> list[tuple[str, str, Vector]]:
    """Split ``d`` into its pieces with common source and tail.

    Piece ``(v, w)`` is ``w* . d . v*``.
    """
    ends = sorted({(p.source, p.tail) for p in d},
                  key=lambda e: (quiver.vertex_index(e[0]), quiver.vertex_index(e[1])))
    return [(v, w, hit_left(trivial(w), hit_right(d, trivial(v)))) for v, w in ends]


def _all_hits(d: Vector) -> Iterable[Vector]:
    prefixes, suffixes = set(), set()
    for q in d:
        for i in range(len(q) + 1):
            prefixes.add(q.prefix(i))
            suffixes.add(q.suffix(i))
    for p in prefixes:
        yield hit_right(d, p)
    for p in suffixes:
        yield hit_left(p, d)


def delta_closed(space: Subspace) -> Vector | None:
    """Return a basis row whose coproduct leaves ``V (x) V``, or None.

    Checks ``(pi (x) id) delta(r) == 0`` and ``(id (x) pi) delta(r) == 0`` with
    ``pi`` the projection onto the normal forms modulo ``V``.
    """
    one = space.field.one
    nf: dict[Path, Vector] = {}

    def normal(p):
        if p not in nf:
            nf[p] = space.reduce(Vector.basis(p, one))
        return nf[p]

    for r in space.rows:
        left, right = Vector(), Vector()
        for (p, q), c in delta(r).items():
            left = left.axpy(c, tensor(normal(p), Vector.basis(q, one)))
            right = right.axpy(c, tensor(Vector.basis(p, one), normal(q)))
        if left or right:
            return r
    return None


# subcoalgebra representations


class Subcoalgebra:
    """Common surface of the four subcoalgebra representations."""

    quiver: Quiver
    field: Field
    kind = "subcoalgebra"

    @property
    def finite(self) -> bool:
        raise NotImplementedError

    def contains_path(self, p: Path) -> bool:
        """Whether ``p`` belongs to P(D), the paths occurring in elements of D."""
        raise NotImplementedError

    def paths(self, bound: int | None = None) -> list[Path]:
        """P(D) in path order, cut at length ``bound`` (required when infinite)."""
        raise NotImplementedError

    def vertices(self) -> list[str]:
        raise NotImplementedError

    def arrows(self) -> list[str]:
        raise NotImplementedError

    def associated_quiver(self) -> Quiver:
        return self.quiver.subquiver(self.vertices(), self.arrows())

    def to_finite(self) -> "FiniteDim":
        raise NotImplementedError

    def has_path_basis(self) -> bool:
        raise NotImplementedError

    def describe(self) -> str:
        return self.kind


class FiniteDim(Subcoalgebra):
    kind = "finite"

    def __init__(self, space: Subspace, certify: bool = True):
        if certify:
            bad = delta_closed(space)
            if bad is not None:
                raise NotASubcoalgebra(f"coproduct of {bad} leaves the subspace")
        self.space = space
        self.quiver = space.quiver
        self.field = space.field

    @classmethod
    def from_vectors(cls, quiver: Quiver, field: Field, vectors: Iterable[Vector]) -> "FiniteDim":
        return cls(Subspace(quiver, field, list(vectors)))

    @classmethod
    def from_paths(cls, quiver: Quiver, field: Field, paths: Iterable[Path]) -> "FiniteDim":
        return cls(Subspace.spanned_by_paths(quiver, field, paths))

    @classmethod
    def zero(cls, quiver: Quiver, field: Field = QQ) -> "FiniteDim":
        return cls(Subspace(quiver, field), certify=False)

    @property
    def finite(self):
        return True

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self.space.rows

    @property
    def max_length(self) -> int:
        return self.space.max_length()

    def member(self, v: Vector) -> bool:
        return self.space.member(v)

    def contains(self, other: "FiniteDim") -> bool:
        return self.space.contains_subspace(other.space)

    def __eq__(self, other):
        return isinstance(other, FiniteDim) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"FiniteDim(dim={self.dim})"

    def contains_path(self, p):
        return any(p in r for r in self.space.rows)

    def paths(self, bound=None):
        ps = self.space.support()
        if bound is not None:
            ps = {p for p in ps if len(p) <= bound}
        return sorted(ps, key=self.quiver.path_key)

    def vertices(self):
        vs = {v for p in self.space.support() for v in p.vertices}
        return [v for v in self.quiver.vertices if v in vs]

    def arrows(self):
        es = {p.arrows[0] for p in self.space.support() if len(p) == 1}
        return [a.name for a in self.quiver.arrows if a.name in es]

    def to_finite(self):
        return self

    def has_path_basis(self):
        return all(len(r) == 1 for r in self.space.rows)

    def describe(self):
        return f"finite-dimensional, dim {self.dim}"


class PathSub(Subcoalgebra):
    """The path coalgebra of a subquiver, sitting inside the ambient one."""

    kind = "pathsub"

    def __init__(self, quiver: Quiver, vertices: Iterable[str], arrows: Iterable[str], field: Field = QQ):
        self.quiver = quiver
        self.field = field
        self.sub = quiver.subquiver(vertices, arrows)

    @classmethod
    def full(cls, quiver: Quiver, field: Field = QQ) -> "PathSub":
        return cls(quiver, quiver.vertices, [a.name for a in quiver.arrows], field)

    @classmethod
    def induced(cls, quiver: Quiver, vertices: Iterable[str], field: Field = QQ) -> "PathSub":
        sub = quiver.full_subquiver(vertices)
        return cls(quiver, sub.vertices, [a.name for a in sub.arrows], field)

    @property
    def finite(self):
        return is_acyclic_quiver(self.sub)

    def contains_path(self, p):
        return self.sub.contains_path(p)

    def paths(self, bound=None):
        if bound is None:
            if not self.finite:
                raise ValueError("P(D) is infinite; give a length bound")
            bound = max(len(self.sub.vertices) - 1, 0)
        return [p for p in self.sub.paths_up_to(bound)]

    def vertices(self):
        return list(self.sub.vertices)

    def arrows(self):
        return [a.name for a in self.sub.arrows]

    def to_finite(self):
        if not self.finite:
            raise ValueError("the subquiver has cycles; its path coalgebra is infinite-dimensional")
        return FiniteDim(Subspace.spanned_by_paths(self.quiver, self.field, self.paths()), certify=False)

    def has_path_basis(self):
        return True

    def __eq__(self, other):
        return isinstance(other, PathSub) and self.quiver == other.quiver and self.sub == other.sub

    def __hash__(self):
        return hash(self.sub)

    def __repr__(self):
        return f"PathSub({self.sub!r})"

    def describe(self):
        nv, ne = len(self.sub.vertices), len(self.sub.arrows)
        return f"path subcoalgebra on {nv} vert{'ex' if nv == 1 else 'ices'} and {ne} arrow{'' if ne == 1 else 's'}"


class TruncatedPC(Subcoalgebra):
    """All paths of length at most ``bound``."""

    kind = "truncated"

    def __init__(self, quiver: Quiver, bound: int, field: Field = QQ):
        if bound < 0:
            raise ValueError("truncation bound must be >= 0")
        self.quiver = quiver
        self.bound = bound
        self.field = field

    @property
    def finite(self):
        return True

    def contains_path(self, p):
        return len(p) <= self.bound and self.quiver.contains_path(p)

    def paths(self, bound=None):
        b = self.bound if bound is None else min(bound, self.bound)
        return self.quiver.paths_up_to(b)

    def vertices(self):
        return list(self.quiver.vertices)

    def arrows(self):
        return [a.name for a in self.quiver.arrows] if self.bound >= 1 else []

    def to_finite(self):
        return FiniteDim(Subspace.spanned_by_paths(self.quiver, self.field, self.paths()), certify=False)

    def has_path_basis(self):
        return True

    def __repr__(self):
        return f"TruncatedPC({self.bound})"

    def describe(self):
        return f"all paths of length <= {self.bound}"


class CyclePowers(Subcoalgebra):
    """The subcoalgebra generated by all powers of one cycle: the span of the
    factors of the periodic word ``c c c ...``."""

    kind = "cyclepowers"

    def __init__(self, quiver: Quiver, cycle: Path, field: Field = QQ):
        if not cycle.is_cycle:
            raise PathError(f"{cycle} is not a cycle")
        if not quiver.contains_path(cycle):
            raise PathError(f"{cycle} is not a path of the quiver")
        self.quiver = quiver
        self.cycle = cycle
        self.field = field
        self.root = _primitive_root(cycle)

    @property
    def finite(self):
        return False

    def contains_path(self, p):
        if p.is_trivial:
            return p.source in self.root.vertices
        n = len(self.root)
        reps = len(p) // n + 2
        word = self.root.arrows * reps
        m = len(p)
        return any(word[i:i + m] == p.arrows for i in range(n))

    def factor_at(self, offset: int, length: int) -> Path:
        n = len(self.root)
        reps = (offset + length) // n + 1
        return power(self.root, reps).factor(offset, offset + length)

    def paths(self, bound=None):
        if bound is None:
            raise ValueError("P(D) is infinite; give a length bound")
        n = len(self.root)
        out = {self.factor_at(i, m) for i in range(n) for m in range(bound + 1)}
        return sorted(out, key=self.quiver.path_key)

    def vertices(self):
        vs = set(self.root.vertices)
        return [v for v in self.quiver.vertices if v in vs]

    def arrows(self):
        es = set(self.root.arrows)
        return [a.name for a in self.quiver.arrows if a.name in es]

    def to_finite(self):
        raise ValueError("the span of all powers of a cycle is infinite-dimensional")

    def has_path_basis(self):
        return True

    def __repr__(self):
        return f"CyclePowers({self.cycle})"

    def describe(self):
        return f"span of the factors of all powers of {self.cycle}"


def _primitive_root(c: Path) -> Path:
    n = len(c)
    for d in range(1, n + 1):
        if n % d == 0 and c.arrows[:d] * (n // d) == c.arrows:
            return c.prefix(d)
    return c


def is_acyclic_quiver(G: Quiver) -> bool:
    return G.is_acyclic()


# operations on every representation


def path_in_P(D: Subcoalgebra, p: Path) -> bool:
    return D.contains_path(p)


def paths_of(D: Subcoalgebra, bound: int | None = None) -> list[Path]:
    return D.paths(bound)


def vertices_of(D: Subcoalgebra) -> list[str]:
    return D.vertices()


def arrows_of(D: Subcoalgebra) -> list[str]:
    return D.arrows()


def associated_quiver(D: Subcoalgebra) -> Quiver:
    return D.associated_quiver()


def span_of_paths(D: Subcoalgebra) -> Subcoalgebra:
    """k.P(D) as a representation."""
    if isinstance(D, FiniteDim):
        return FiniteDim(Subspace.spanned_by_paths(D.quiver, D.field, D.paths()))
    return D


def path_coalgebra_of(D: Subcoalgebra) -> PathSub:
    """PC(G(D)), the smallest path subcoalgebra containing D."""
    return PathSub(D.quiver, D.vertices(), D.arrows(), D.field)


def closure(generators: Sequence[Vector], quiver: Quiver, field: Field = QQ) -> FiniteDim:
    """Smallest subcoalgebra containing ``generators``.

    Inserts ``d . p*`` and ``p* . d`` for every new vector ``d`` until nothing
    new appears; a subspace stable under both hit actions is a subcoalgebra.
    """
    V = Subspace(quiver, field)
    queue = deque()
    for g in generators:
        V, grew = V.insert(g)
        if grew:
            queue.append(g)
    while queue:
        d = queue.popleft()
        for w in _all_hits(d):
            V, grew = V.insert(w)
            if grew:
                queue.append(w)
    return FiniteDim(V)


def _same_ambient(A: FiniteDim, B: FiniteDim):
    if not isinstance(A, FiniteDim) or not isinstance(B, FiniteDim):
        raise TypeError("wedge needs finite-dimensional representations")
    if A.quiver != B.quiver:
        raise AmbientMismatch("subcoalgebras of different path coalgebras")
    if A.field != B.field:
        raise AmbientMismatch("subcoalgebras over different fields")


def wedge_bound(A: FiniteDim, B: FiniteDim) -> int:
    """Paths of length > L_A + L_B + 1 cannot lie in A^B."""
    return A.max_length + B.max_length + 1


def wedge(A: FiniteDim, B: FiniteDim, reverse: bool = False, truncation: int | None = None) -> FiniteDim:
    """``{x : delta(x) in A (x) C + C (x) B}``, computed as the kernel of
    ``(pi_A (x) pi_B) o delta`` on the paths of length at most the truncation.

    ``reverse=True`` computes the opposite orientation, ``B ^ A``.
    """
    if reverse:
        A, B = B, A
    _same_ambient(A, B)
    L = wedge_bound(A, B) if truncation is None else truncation
    G, F = A.quiver, A.field
    one = F.one
    nfA: dict[Path, Vector] = {}
    nfB: dict[Path, Vector] = {}

    def normal(cache, space, p):
        if p not in cache:
            cache[p] = space.reduce(Vector.basis(p, one))
        return cache[p]

    ambient = G.paths_up_to(L)
    rows = []
    for p in ambient:
        img = Vector()
        for p1, p2 in p.splits():
            a = normal(nfA, A.space, p1)
            if not a:
                continue
            b = normal(nfB, B.space, p2)
            if b:
                img = img + tensor(a, b)
        rows.append((p, img))
    out = FiniteDim(kernel(rows, ambient, G, F))
    if not (out.contains(A) and out.contains(B)):
        raise CrossCheckFailure("wedge does not contain A + B")
    return out


def annihilator(space: Subspace, paths: Sequence[Path]) -> list[Vector]:
    """Basis of the vectors on ``paths`` killed by every row of ``space``
    (rows read as functionals in dual-basis coordinates, or vice versa)."""
    one = space.field.one
    out = []
    for q in paths:
        if q in space.pivots:
            continue
        v = {q: one}
        for r in space.rows:
            c = r[q]
            if c:
                v[space.pivot_of(r)] = -c
        out.append(Vector(v))
    return out


def wedge_dual_oracle(A: FiniteDim, B: FiniteDim, reverse: bool = False,
                      truncation: int | None = None) -> FiniteDim:
    """A^B as the annihilator of the product of the annihilators, inside the
    truncated dual algebra with the convolution product."""
    if reverse:
        A, B = B, A
    _same_ambient(A, B)
    L = wedge_bound(A, B) if truncation is None else truncation
    G, F = A.quiver, A.field
    paths = G.paths_up_to(L)
    if A.max_length > L or B.max_length > L:
        raise ValueError("truncation below the subcoalgebras themselves")
    a_perp = annihilator(A.space, paths)
    b_perp = annihilator(B.space, paths)
    prod = Subspace(G, F)
    for f in a_perp:
        for g in b_perp:
            h = convolve(f, g, L)
            if h:
                prod, _ = prod.insert(h)
    return FiniteDim(Subspace(G, F, annihilator(prod, paths)))


def wedge_power(A: FiniteDim, n: int) -> FiniteDim:
    if n < 1:
        raise ValueError("wedge power needs n >= 1")
    W = A
    for _ in range(n - 1):
        W = wedge(A, W)
    return W


def coradical(D: Subcoalgebra) -> FiniteDim:
    """Span of the vertices of D; valid because path coalgebras are pointed."""
    return FiniteDim(Subspace.spanned_by_paths(D.quiver, D.field, [trivial(v) for v in D.vertices()]),
                     certify=False)


@dataclass
class Decision:
    value: bool
    reason: str
    witness: object = None

    def __bool__(self):
        return self.value


def missing_arrow(G: Quiver, sub: Quiver) -> str | None:
    vs = set(sub.vertices)
    for a in G.arrows:
        if a.source in vs and a.tail in vs and not sub.has_arrow(a.name):
            return a.name
    return None


def is_coidempotent(D: Subcoalgebra) -> Decision:
    if isinstance(D, PathSub):
        x = missing_arrow(D.quiver, D.sub)
        if x is None:
            return Decision(True, "full subquiver: every arrow between its vertices is present")
        return Decision(False, f"arrow {x} joins two vertices of the subquiver but is missing", x)
    if isinstance(D, TruncatedPC):
        longer = D.quiver.paths_of_length(D.bound + 1)
        if not longer:
            return Decision(True, "no path exceeds the bound, so D is the whole path coalgebra")
        return Decision(False, f"path {longer[0]} lies in D^D but not in D", longer[0])
    if isinstance(D, CyclePowers):
        H = D.associated_quiver()
        for v in H.vertices:
            if len(H.out_arrows(v)) > 1:
                names = [a.name for a in H.out_arrows(v)]
                return Decision(False, f"vertex {v} has arrows {', '.join(names)} in G(D), so "
                                       "k.P(D) is not the path coalgebra of G(D)", v)
        return is_coidempotent(path_coalgebra_of(D))
    if isinstance(D, FiniteDim):
        W = wedge(D, D)
        for r in W.rows:
            if not D.member(r):
                return Decision(False, "D^D is strictly larger than D", r)
        return Decision(True, "D^D equals D")
    raise TypeError(f"unsupported representation {D!r}")
