"""Reduction by a vertex idempotent.

For a vertex set S let ``e`` be its characteristic functional.  The space
``e.C.e`` is spanned by the paths with both endpoints in S and its coproduct
only splits at S-vertices.  Combinatorially it is the path coalgebra of the
condensation of the quiver over S, which is how reductions are represented.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coalg import CyclePowers, FiniteDim, PathSub, Subcoalgebra, TruncatedPC, convolve
from .pathspace import Subspace, Vector, tensor
from .prime import PrimeVerdict, Status, is_prime
from .quiver import (CondensedQuiver, InfiniteCondensation, Path, PathError, Quiver, QuiverError,
                     concat, condense, make_condensed, trivial)


@dataclass(frozen=True)
class VertexIdempotent:
    quiver: Quiver
    S: frozenset

    def __init__(self, quiver: Quiver, S):
        S = frozenset(S)
        if not S:
            raise ValueError("the vertex set must be nonempty")
        for v in S:
            if not quiver.has_vertex(v):
                raise QuiverError(f"unknown vertex {v!r}")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "S", S)

    @property
    def ordered(self) -> tuple[str, ...]:
        return tuple(v for v in self.quiver.vertices if v in self.S)

    def __call__(self, p: Path) -> int:
        return int(p.is_trivial and p.source in self.S)

    def functional(self, one=1) -> Vector:
        """``e`` in dual-basis coordinates."""
        return Vector((trivial(v), one) for v in self.ordered)

    def is_idempotent(self, bound: int = 2, one=1) -> bool:
        f = self.functional(one)
        return convolve(f, f, bound) == f

    def keeps(self, p: Path) -> bool:
        return p.source in self.S and p.tail in self.S

    def __repr__(self):
        return f"VertexIdempotent({{{', '.join(self.ordered)}}})"


def _idem(S, quiver=None) -> VertexIdempotent:
    if isinstance(S, VertexIdempotent):
        return S
    if quiver is None:
        raise TypeError("pass a VertexIdempotent or a quiver")
    return VertexIdempotent(quiver, S)


def phi(S: VertexIdempotent, d: Vector) -> Vector:
    """``e.d.e``: the part of ``d`` running between S-vertices."""
    return d.restrict(S.keeps)


def phi_tensor(S: VertexIdempotent, t: Vector) -> Vector:
    return t.restrict(lambda pq: S.keeps(pq[0]) and S.keeps(pq[1]))


def reduced_delta(S: VertexIdempotent, p) -> Vector:
    """Coproduct of ``e.C.e``: deconcatenation at S-vertices only.

    Accepts a path or a vector supported on paths between S-vertices.
    """
    if isinstance(p, Path):
        if not S.keeps(p):
            raise PathError(f"{p} does not start and end in S")
        return Vector._raw({(p.prefix(i), p.suffix(i)): 1 for i in range(len(p) + 1)
                            if p.vertices[i] in S.S})
    out = Vector()
    for q, c in p.items():
        out = out.axpy(c, reduced_delta(S, q))
    return out


def reduced_counit(S: VertexIdempotent, d: Vector):
    return sum((c for p, c in d.items() if p.is_trivial and p.source in S.S), 0)


def reduced_closed(S: VertexIdempotent, space: Subspace) -> Vector | None:
    """A row of ``space`` whose reduced coproduct leaves ``space (x) space``."""
    one = space.field.one
    for r in space.rows:
        if not all(S.keeps(p) for p in r):
            return r
        left, right = Vector(), Vector()
        for (p, q), c in reduced_delta(S, r).items():
            left = left.axpy(c, tensor(space.reduce(Vector.basis(p, one)), Vector.basis(q, one)))
            right = right.axpy(c, tensor(Vector.basis(p, one), space.reduce(Vector.basis(q, one))))
        if left or right:
            return r
    return None


def reduced_wedge_contains(S: VertexIdempotent, A: Subspace, B: Subspace, d: Vector) -> bool:
    """Whether ``d`` lies in ``A ^ B`` computed inside ``e.C.e``."""
    one = A.field.one
    img = Vector()
    for (p, q), c in reduced_delta(S, d).items():
        img = img.axpy(c, tensor(A.reduce(Vector.basis(p, one)), B.reduce(Vector.basis(q, one))))
    return not img


def phi_space(S: VertexIdempotent, space: Subspace) -> Subspace:
    return Subspace(space.quiver, space.field, [phi(S, r) for r in space.rows])


def phi_preimage(S: VertexIdempotent, H: Subspace, bound: int) -> Subspace:
    """``{d : phi(d) in H}`` among paths of length at most ``bound``."""
    G = H.quiver
    dropped = [p for p in G.paths_up_to(bound) if not S.keeps(p)]
    return H.extend(Vector.basis(p, H.field.one) for p in dropped)


# reductions


@dataclass
class Reduction:
    """``e.D.e`` carried by a coalgebra over the condensed quiver."""

    S: VertexIdempotent
    condensed: CondensedQuiver | None
    rep: Subcoalgebra | None
    status: str = "ok"
    reason: str = ""

    @property
    def zero(self) -> bool:
        return self.status == "zero"

    def to_ambient(self, p: Path) -> Path:
        return self.condensed.to_ambient(p)

    def ambient_space(self, bound: int | None = None) -> Subspace:
        """The reduction's paths or rows read back in the original quiver."""
        G = self.S.quiver
        F = self.rep.field
        if isinstance(self.rep, FiniteDim):
            rows = [r.map_keys(self.to_ambient) for r in self.rep.rows]
            return Subspace(G, F, rows)
        return Subspace.spanned_by_paths(G, F, [self.to_ambient(p) for p in self.rep.paths(bound)])


def _segments(p: Path, S: set) -> list[Path]:
    out, start = [], 0
    for i in range(1, len(p) + 1):
        if p.vertices[i] in S:
            out.append(p.factor(start, i))
            start = i
    return out


def _zero(S: VertexIdempotent, D: Subcoalgebra) -> Reduction:
    C = make_condensed(S.quiver, S.S, [])
    return Reduction(S, C, FiniteDim.zero(C.quiver, D.field), "zero", "S misses every vertex of D")


def reduce_subcoalgebra(D: Subcoalgebra, S) -> Reduction:
    S = _idem(S, D.quiver)
    G = D.quiver
    if isinstance(D, TruncatedPC):
        D = D.to_finite()
    if isinstance(D, FiniteDim):
        rows = [phi(S, r) for r in D.rows]
        rows = [r for r in rows if r]
        if not rows:
            return _zero(S, D)
        Vphi = Subspace(G, D.field, rows)
        bad = reduced_closed(S, Vphi)
        if bad is not None:
            raise AssertionError(f"phi(D) is not closed under the reduced coproduct at {bad}")
        segs = {seg for r in Vphi.rows for p in r for seg in _segments(p, S.S)}
        C = make_condensed(G, S.S, segs)
        moved = Subspace(C.quiver, D.field, [r.map_keys(C.to_condensed) for r in Vphi.rows])
        return Reduction(S, C, FiniteDim(moved), reason="phi of a basis, re-echelonized")
    if isinstance(D, PathSub):
        keep = [v for v in D.sub.vertices if v in S.S]
        if not keep:
            return _zero(S, D)
        C = condense(D.sub, keep)
        return Reduction(S, C, PathSub.full(C.quiver, D.field), reason="path coalgebra of the condensed subquiver")
    if isinstance(D, CyclePowers):
        root = D.root
        hits = [i for i in range(len(root)) if root.vertices[i] in S.S]
        if not hits:
            return _zero(S, D)
        i = hits[0]
        rotated = concat(root.suffix(i), root.prefix(i))
        C = make_condensed(G, S.S, _segments(rotated, S.S))
        cyc = C.to_condensed(rotated)
        return Reduction(S, C, CyclePowers(C.quiver, cyc, D.field), reason="powers of the condensed cycle")
    raise TypeError(f"unsupported representation {D!r}")


# local test


@dataclass
class ProfileEntry:
    pair: tuple[str, str]
    verdict: PrimeVerdict | None
    reduction: Reduction | None = None
    note: str = ""

    @property
    def vacuous(self) -> bool:
        return self.verdict is None

    def to_dict(self) -> dict:
        status = "vacuous" if self.verdict is None else self.verdict.status.value
        out = {"pair": list(self.pair), "verdict": status}
        if self.verdict is not None:
            out["certificate"] = {"reason": self.verdict.reason, **_plain(self.verdict.certificate)}
        elif self.note:
            out["certificate"] = {"reason": self.note}
        return out


def _plain(cert: dict) -> dict:
    return {k: v for k, v in cert.items() if isinstance(v, (int, str, list, tuple))}


@dataclass
class Profile:
    entries: list[ProfileEntry] = field(default_factory=list)

    @property
    def aggregate(self) -> Status:
        live = [e.verdict.status for e in self.entries if e.verdict is not None]
        if Status.NOT_PRIME in live:
            return Status.NOT_PRIME
        if not live or Status.UNSUPPORTED in live:
            return Status.UNSUPPORTED
        return Status.PRIME

    def entry(self, v: str, w: str | None = None) -> ProfileEntry:
        w = v if w is None else w
        for e in self.entries:
            if set(e.pair) == {v, w}:
                return e
        raise KeyError((v, w))


def local_prime_profile(D: Subcoalgebra) -> Profile:
    """Primeness of ``e.D.e`` for every vertex set of size one or two.

    Singletons are included since the two endpoints of a homogeneous element
    may coincide.  Reductions to zero are vacuous and do not vote.
    """
    G = D.quiver
    prof = Profile()
    for i, j in itertools.combinations_with_replacement(range(len(G.vertices)), 2):
        pair = (G.vertices[i], G.vertices[j])
        try:
            red = reduce_subcoalgebra(D, set(pair))
        except InfiniteCondensation as e:
            v = PrimeVerdict(Status.UNSUPPORTED, f"infinite condensation through the cycle {e.cycle}")
            prof.entries.append(ProfileEntry(pair, v))
            continue
        if red.zero:
            prof.entries.append(ProfileEntry(pair, None, red, red.reason))
            continue
        prof.entries.append(ProfileEntry(pair, is_prime(red.rep), red))
    return prof


def wedge_reduction_check(A: FiniteDim, B: FiniteDim, S: VertexIdempotent, W: FiniteDim | None = None) -> bool:
    """``phi(A ^ B)`` lies in ``phi(A) ^ phi(B)`` computed in ``e.C.e``."""
    from .coalg import wedge

    W = W if W is not None else wedge(A, B)
    pa, pb = phi_space(S, A.space), phi_space(S, B.space)
    return all(reduced_wedge_contains(S, pa, pb, phi(S, r)) for r in W.rows)

