"""Primeness of subcoalgebras of a path coalgebra.

A coalgebra D is prime when ``D ⊆ A ^ B`` forces ``D ⊆ A`` or ``D ⊆ B``.
The deciders dispatch on the representation:

* finite-dimensional: prime iff simple, i.e. spanned by one vertex;
* path subcoalgebra PC(G'): prime iff G' is strongly connected;
* powers of a cycle: always prime.

Every negative verdict carries a witness pair ``(A, B)`` that can be
re-checked with :func:`verify_witness`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .coalg import (CrossCheckFailure, CyclePowers, Decision, FiniteDim, PathSub, Subcoalgebra,
                    TruncatedPC, _all_hits, coradical, path_coalgebra_of, span_of_paths, wedge)
from .pathspace import Subspace, Vector, tensor
from .quiver import (Path, concat, find_cycle_through as quiver_cycle_through, is_connected,
                     max_disjoint_occurrences, power, reachable, reachable_set, strongly_connected,
                     subpaths, trivial)
from .scalars import PrimeField


class Status(Enum):
    PRIME = "prime"
    NOT_PRIME = "not_prime"
    UNSUPPORTED = "unsupported"


@dataclass
class PrimeVerdict:
    status: Status
    reason: str
    criterion: str = ""
    witness: tuple[Subcoalgebra, Subcoalgebra] | None = None
    certificate: dict = field(default_factory=dict)

    @property
    def prime(self) -> bool:
        return self.status is Status.PRIME

    @property
    def not_prime(self) -> bool:
        return self.status is Status.NOT_PRIME

    @property
    def unsupported(self) -> bool:
        return self.status is Status.UNSUPPORTED

    def __repr__(self):
        return f"PrimeVerdict({self.status.value}: {self.reason})"


FINITE = "finite-dimensional prime coalgebras are simple"
STRONG = "a path coalgebra is prime iff its quiver is strongly connected"
PATHWISE = "path-spanned coalgebra whose paths embed in order into one path"
BRUTE = "exhaustive search over all pairs of subcoalgebras"


def is_prime(D: Subcoalgebra) -> PrimeVerdict:
    if isinstance(D, (FiniteDim, TruncatedPC)):
        return _finite_verdict(D.to_finite())
    if isinstance(D, PathSub):
        return _pathsub_verdict(D)
    if isinstance(D, CyclePowers):
        return PrimeVerdict(Status.PRIME, "any two factors of powers of a cycle embed, in order, "
                                         "in a higher power", PATHWISE,
                            certificate={"cycle": str(D.root)})
    return PrimeVerdict(Status.UNSUPPORTED, f"no decider for {D!r}")


def _finite_verdict(D: FiniteDim) -> PrimeVerdict:
    if D.dim == 0:
        return PrimeVerdict(Status.UNSUPPORTED, "the zero coalgebra", FINITE)
    vs = D.vertices()
    if D.dim == 1:
        return PrimeVerdict(Status.PRIME, f"spanned by the grouplike {vs[0]}", FINITE,
                            certificate={"vertex": vs[0]})
    G, F = D.quiver, D.field
    R = coradical(D)
    if D.contains(R) and R.contains(D):
        A = FiniteDim.from_paths(G, F, [trivial(vs[0])])
        B = FiniteDim.from_paths(G, F, [trivial(v) for v in vs[1:]])
        return PrimeVerdict(Status.NOT_PRIME, f"cosemisimple with {len(vs)} vertices", FINITE,
                            witness=(A, B), certificate={"n": 1})
    W = R
    for n in range(2, D.max_length + 3):
        Wn = wedge(W, R)
        if Wn.contains(D):
            return PrimeVerdict(Status.NOT_PRIME,
                                f"dimension {D.dim} > 1; D lies in the wedge power R^{n} of its coradical R",
                                FINITE, witness=(W, R), certificate={"n": n})
        W = Wn
    raise CrossCheckFailure("coradical filtration did not exhaust D")


def _pathsub_verdict(D: PathSub) -> PrimeVerdict:
    H = D.sub
    if not H.vertices:
        return PrimeVerdict(Status.UNSUPPORTED, "the zero coalgebra", STRONG)
    conn = strongly_connected(H)
    if conn:
        return PrimeVerdict(Status.PRIME, "the subquiver is strongly connected", STRONG,
                            certificate={"components": conn.components})
    u, w = _unreachable_pair(H)
    closed = reachable_set(H, u)
    A = _induced_in(D, [v for v in H.vertices if v not in closed])
    B = _induced_in(D, [v for v in H.vertices if v in closed])
    return PrimeVerdict(Status.NOT_PRIME, f"no path from {u} to {w}", STRONG, witness=(A, B),
                        certificate={"from": u, "to": w, "components": conn.components})


def _unreachable_pair(H):
    for u in H.vertices:
        closed = reachable_set(H, u)
        for w in H.vertices:
            if w not in closed:
                return u, w
    return None


def _induced_in(D: PathSub, vertices) -> PathSub:
    vs = set(vertices)
    arrows = [a.name for a in D.sub.arrows if a.source in vs and a.tail in vs]
    return PathSub(D.quiver, vs, arrows, D.field)


# witnesses


def _path_split_ok(p: Path, A: Subcoalgebra, B: Subcoalgebra) -> bool:
    return all(A.contains_path(p1) or B.contains_path(p2) for p1, p2 in p.splits())


def verify_witness(D: Subcoalgebra, A: Subcoalgebra, B: Subcoalgebra) -> bool:
    """Check ``D ⊆ A ^ B`` while ``D ⊄ A`` and ``D ⊄ B``."""
    if all(X.finite for X in (D, A, B)):
        Df, Af, Bf = D.to_finite(), A.to_finite(), B.to_finite()
        return wedge(Af, Bf).contains(Df) and not Af.contains(Df) and not Bf.contains(Df)
    if not all(X.has_path_basis() for X in (D, A, B)):
        raise ValueError("cannot verify a witness mixing infinite and non-path-spanned pieces")
    # With path bases the wedge condition is checked split by split.  A shortest
    # violating path runs from a bad element of the prefix to one of the suffix.
    bound = len(D.vertices()) + 2
    ps = D.paths(bound)
    return (all(_path_split_ok(p, A, B) for p in ps)
            and any(not A.contains_path(p) for p in ps)
            and any(not B.contains_path(p) for p in ps))


# ordered embedding


def embedding_witness(D: Subcoalgebra, p1: Path, p2: Path, search: int | None = None):
    """A pair ``(q, i)`` with ``q`` in P(D), ``p1`` inside ``q[:i]`` and ``p2``
    inside ``q[i:]``; None when there is none."""
    if not (D.contains_path(p1) and D.contains_path(p2)):
        raise ValueError("both paths must lie in P(D)")
    if isinstance(D, PathSub):
        r = reachable(D.sub, p1.tail, p2.source)
        if r is None:
            return None
        return concat(concat(p1, r), p2), len(p1) + len(r)
    if isinstance(D, CyclePowers):
        n = len(D.root)
        top = search or (len(p1) + len(p2)) // n + 3
        for m in range(1, top + 1):
            q = power(D.root, m)
            for i in range(len(q) + 1):
                if max_disjoint_occurrences(p1, q.prefix(i)) and max_disjoint_occurrences(p2, q.suffix(i)):
                    return q, i
        return None
    for q in D.paths():
        for i in range(len(q) + 1):
            if max_disjoint_occurrences(p1, q.prefix(i)) and max_disjoint_occurrences(p2, q.suffix(i)):
                return q, i
    return None


def ordered_embedding_condition(D: Subcoalgebra) -> Decision:
    """Every ordered pair ``(p1, p2)`` from P(D) embeds as ``p1 ⪯ u``, ``p2 ⪯ v``
    for some ``uv`` in P(D)."""
    if isinstance(D, CyclePowers):
        return Decision(True, "every pair of factors embeds in a power of the cycle")
    if isinstance(D, PathSub):
        H = D.sub
        cands = [H.path(a.name) for a in H.arrows] + [trivial(v) for v in H.vertices]
        for p1, p2 in itertools.product(cands, repeat=2):
            if reachable(H, p1.tail, p2.source) is None:
                return Decision(False, f"no path from {p1.tail} to {p2.source}", (p1, p2))
        return Decision(True, "every vertex reaches every other")
    D = D.to_finite()
    ps = D.paths()
    embeds = set()
    for q in ps:
        for i in range(len(q) + 1):
            left, right = subpaths(q.prefix(i)), subpaths(q.suffix(i))
            embeds.update(itertools.product(left, right))
    key = D.quiver.path_key
    for p1, p2 in itertools.product(sorted(ps, key=key, reverse=True), repeat=2):
        if (p1, p2) not in embeds:
            return Decision(False, f"no path of P(D) carries {p1} followed by {p2}", (p1, p2))
    return Decision(True, "checked every ordered pair of P(D)")


# constructive cycles


def find_cycle_through(D: Subcoalgebra, q: Path, n: int) -> Path | None:
    """A cycle ``c`` in P(D) with ``q`` occurring at least ``n`` times disjointly."""
    if n < 1:
        raise ValueError("n must be positive")
    if not D.contains_path(q):
        raise ValueError(f"{q} is not in P(D)")
    if isinstance(D, CyclePowers):
        root = D.root
        for m in range(1, n * (len(q) // len(root) + 2) + 1):
            c = power(root, m)
            if max_disjoint_occurrences(q, c) >= n:
                return c
        raise CrossCheckFailure("no power of the cycle carries the path often enough")
    if isinstance(D, PathSub):
        H = D.sub
        if q.is_trivial:
            base = quiver_cycle_through(H, q.source)
        else:
            r = reachable(H, q.tail, q.source)
            base = None if r is None else concat(q, r)
        if base is None:
            return None
        c = power(base, n)
        assert max_disjoint_occurrences(q, c) >= n
        return c
    F = D.to_finite()
    for c in F.paths():
        if c.is_cycle and max_disjoint_occurrences(q, c) >= n:
            return c
    return None


def common_superpath(D: Subcoalgebra, element: Vector, n: int) -> Path | None:
    """A path of P(D) containing every support path of ``element`` ``n`` times."""
    if n < 1:
        raise ValueError("n must be positive")
    ps = sorted(element, key=D.quiver.path_key)
    if not ps:
        raise ValueError("zero element")
    for p in ps:
        if not D.contains_path(p):
            raise ValueError(f"{p} is not in P(D)")

    def good(q):
        return all(max_disjoint_occurrences(p, q) >= n for p in ps)

    if isinstance(D, CyclePowers):
        longest = max(len(p) for p in ps)
        for m in range(1, n * (longest // len(D.root) + 2) + 1):
            q = power(D.root, m)
            if good(q):
                return q
        raise CrossCheckFailure("no power of the cycle carries the support often enough")
    if isinstance(D, PathSub):
        # chain the support in every order when it is small, keep the shortest
        orders = itertools.permutations(ps) if len(ps) <= 6 else [ps]
        best = None
        for order in orders:
            q = _chain(D.sub, order, n)
            if q is not None and good(q) and (best is None or len(q) < len(best)):
                best = q
        return best
    for q in D.to_finite().paths():
        if good(q):
            return q
    return None


def _chain(H, ps, n: int) -> Path | None:
    chain = ps[0]
    for p in ps[1:]:
        r = reachable(H, chain.tail, p.source)
        if r is None:
            return None
        chain = concat(concat(chain, r), p)
    if n == 1:
        return chain
    back = reachable(H, chain.tail, chain.source)
    if back is None:
        return None
    return concat(power(concat(chain, back), n - 1), chain)


# brute force over GF(2)


def enumerate_subcoalgebras(ambient: FiniteDim, limit: int = 12) -> list[FiniteDim]:
    """All subcoalgebras of a small finite-dimensional coalgebra over GF(p).

    Every subcoalgebra is the sum of the subcoalgebras generated by its
    elements, so the cyclic ones are found by closing every vector of the
    ambient space, then sums are added until nothing new appears.
    """
    F = ambient.field
    if not isinstance(F, PrimeField):
        raise ValueError("enumeration needs a finite field")
    if ambient.dim > limit:
        raise ValueError(f"ambient dimension {ambient.dim} exceeds {limit}")
    G = ambient.quiver
    rows = ambient.rows
    cyclic = {}
    for coeffs in itertools.product(F.elements(), repeat=len(rows)):
        v = Vector()
        for c, r in zip(coeffs, rows):
            v = v.axpy(c, r)
        if not v:
            continue
        C = _cyclic(v, G, F)
        cyclic.setdefault(C.space.rows, C)
    found = {(): FiniteDim.zero(G, F)}
    found.update(cyclic)
    frontier = list(found.values())
    gens = list(cyclic.values())
    while frontier:
        nxt = []
        for X in frontier:
            for Y in gens:
                S = X.space.sum(Y.space)
                if S.rows not in found:
                    Z = FiniteDim(S, certify=False)
                    found[S.rows] = Z
                    nxt.append(Z)
        frontier = nxt
    key = G.path_key
    return sorted(found.values(), key=lambda X: (X.dim, [key(X.space.pivot_of(r)) for r in X.rows]))


def _cyclic(v: Vector, G, F) -> FiniteDim:
    V = Subspace(G, F)
    V, _ = V.insert(v)
    queue = [v]
    while queue:
        d = queue.pop()
        for w in _all_hits(d):
            V, grew = V.insert(w)
            if grew:
                queue.append(w)
    return FiniteDim(V, certify=False)


def _in_wedge(d_rows, A: FiniteDim, B: FiniteDim, deltas) -> bool:
    one = A.field.one
    for dl in deltas:
        img = Vector()
        for (p, q), c in dl.items():
            a = A.space.reduce(Vector.basis(p, one))
            if not a:
                continue
            b = B.space.reduce(Vector.basis(q, one))
            if b:
                img = img.axpy(c, tensor(a, b))
        if img:
            return False
    return True


def brute_force_prime(D: FiniteDim, ambient: FiniteDim, subcoalgebras: list[FiniteDim] | None = None
                      ) -> PrimeVerdict:
    """Decide primeness from the definition by trying every pair (A, B) of
    subcoalgebras of ``ambient``.  Over GF(2) only, at desk scale."""
    from .coalg import delta

    if D.field != PrimeField(2) or ambient.field != PrimeField(2):
        raise ValueError("the brute-force oracle works over GF(2)")
    if ambient.dim > 12 or D.dim > 5:
        raise ValueError("size guard: ambient dimension <= 12 and dim D <= 5")
    if D.dim == 0:
        raise ValueError("the zero coalgebra is excluded")
    if not ambient.contains(D):
        raise ValueError("D must lie in the ambient coalgebra")
    subs = subcoalgebras if subcoalgebras is not None else enumerate_subcoalgebras(ambient)
    missing = [X for X in subs if not X.contains(D)]
    deltas = [delta(r) for r in D.rows]
    for A in missing:
        for B in missing:
            if _in_wedge(D.rows, A, B, deltas):
                return PrimeVerdict(Status.NOT_PRIME, "found A, B with D inside A^B but in neither",
                                    BRUTE, witness=(A, B), certificate={"pairs": len(missing) ** 2})
    return PrimeVerdict(Status.PRIME, f"no pair among {len(subs)} subcoalgebras separates D", BRUTE,
                        certificate={"subcoalgebras": len(subs)})


def derived_reps_prime(D: Subcoalgebra) -> tuple[PrimeVerdict, PrimeVerdict]:
    """Verdicts for k.P(D) and for PC(G(D))."""
    return is_prime(span_of_paths(D)), is_prime(path_coalgebra_of(D))


def prime_implies_connected(D: Subcoalgebra, verdict: PrimeVerdict) -> bool:
    return not verdict.prime or is_connected(D.associated_quiver())
