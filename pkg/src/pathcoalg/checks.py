"""Executable property suites.

Each ``check_*`` function inspects one instance and returns a list of failure
messages (empty when everything holds).  The ``suite_*`` functions drive them
over seeded random instances and return a :class:`CheckResult`; ``run_all``
runs everything, which is what ``pathcoalg check`` reports.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .coalg import (CyclePowers, FiniteDim, PathSub, Subcoalgebra, TruncatedPC, closure, coradical,
                    delta, delta_closed, homogeneous_components, hit_left, hit_right, is_coidempotent,
                    span_of_paths, wedge, wedge_bound, wedge_dual_oracle)
from .pathspace import Subspace, Vector, tensor
from .prime import (brute_force_prime, derived_reps_prime, enumerate_subcoalgebras, find_cycle_through,
                    is_prime, ordered_embedding_condition, verify_witness)
from .quiver import (InfiniteCondensation, Quiver, concat, is_connected, max_disjoint_occurrences,
                     reachable, strongly_connected, subpaths, trivial)
from .reduce import (VertexIdempotent, local_prime_profile, phi, phi_space, phi_tensor, reduce_subcoalgebra,
                     reduced_delta, reduced_wedge_contains)
from .scalars import QQ, Field, PrimeField

GF2 = PrimeField(2)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, label: str, problems: Iterable[str]):
        self.cases += 1
        self.failures.extend(f"{label}: {p}" for p in problems)

    def line(self) -> str:
        tag = "ok" if self.ok else "FAIL"
        return f"{tag:4} {self.name} ({self.cases} cases, {len(self.failures)} failures)"


# random instances


def random_quiver(rng: random.Random, max_vertices: int = 6, max_arrows: int = 10,
                  min_vertices: int = 1) -> Quiver:
    n = rng.randint(min_vertices, max_vertices)
    m = rng.randint(0, max_arrows)
    vs = [f"v{i}" for i in range(n)]
    arrows = [(f"e{j}", rng.choice(vs), rng.choice(vs)) for j in range(m)]
    return Quiver(vs, arrows)


def _coeff(rng: random.Random, F: Field):
    if isinstance(F, PrimeField):
        return F(rng.randint(1, F.p - 1))
    c = 0
    while not c:
        c = F(rng.randint(-3, 3))
    return c


def random_element(rng: random.Random, G: Quiver, F: Field = QQ, max_length: int = 2,
                   terms: int = 3) -> Vector:
    ps = G.paths_up_to(max_length)
    if not ps:
        return Vector()
    return Vector((rng.choice(ps), _coeff(rng, F)) for _ in range(rng.randint(1, terms)))


def random_closure(rng: random.Random, G: Quiver, F: Field = QQ, max_length: int = 2,
                   generators: int = 2) -> FiniteDim:
    gens = [random_element(rng, G, F, max_length) for _ in range(rng.randint(1, generators))]
    return closure([g for g in gens if g], G, F)


def random_wedge_pair(rng: random.Random, F: Field = QQ, limit: int = 60):
    """Two random closures whose wedge lives on at most ``limit`` paths."""
    while True:
        G = random_quiver(rng, 3, 4)
        if not G.arrows:
            continue
        A = random_closure(rng, G, F, 2)
        B = random_closure(rng, G, F, 2)
        if A.dim == 0 or B.dim == 0:
            continue
        L = wedge_bound(A, B)
        if G.count_paths_up_to(L) <= limit and G.count_paths_up_to(L + 2) <= 4 * limit:
            return A, B


# subcoalgebra laws


def check_subcoalgebra(D: FiniteDim) -> list[str]:
    out = []
    bad = delta_closed(D.space)
    if bad is not None:
        out.append(f"delta of {bad} leaves D (x) D")
    ps = set(D.paths())
    for p in ps:
        missing = subpaths(p) - ps
        if missing:
            out.append(f"subpaths {sorted(map(str, missing))} of {p} are not in P(D)")
    for r in D.rows:
        for p in {q.prefix(i) for q in r for i in range(len(q) + 1)}:
            if not D.member(hit_right(r, p)):
                out.append(f"stripping prefix {p} from {r} leaves D")
        for p in {q.suffix(i) for q in r for i in range(len(q) + 1)}:
            if not D.member(hit_left(p, r)):
                out.append(f"stripping suffix {p} from {r} leaves D")
    one = D.field.one
    for v in D.vertices():
        if not D.member(Vector.basis(trivial(v), one)):
            out.append(f"vertex {v} of V(D) is not an element of D")
    pieces = Subspace(D.quiver, D.field)
    for r in D.rows:
        for _, _, h in homogeneous_components(r, D.quiver):
            if not D.member(h):
                out.append(f"homogeneous piece {h} of {r} is not in D")
            pieces, _ = pieces.insert(h)
    if pieces != D.space:
        out.append("homogeneous components do not reassemble D")
    K = span_of_paths(D)
    if not K.contains(D):
        out.append("k.P(D) does not contain D")
    if delta_closed(K.space) is not None:
        out.append("k.P(D) is not a subcoalgebra")
    R = coradical(D)
    if not D.contains(R):
        out.append("the coradical is not inside D")
    return out


def check_monotone(A: FiniteDim, B: FiniteDim) -> list[str]:
    if not B.contains(A):
        return []
    if not set(A.paths()) <= set(B.paths()):
        return ["A inside B but P(A) not inside P(B)"]
    return []


def check_wedge(A: FiniteDim, B: FiniteDim) -> list[str]:
    out = []
    W = wedge(A, B)
    if wedge_dual_oracle(A, B) != W:
        out.append("wedge differs from the dual oracle")
    L = wedge_bound(A, B)
    if wedge(A, B, truncation=L + 2) != W:
        out.append("re-running at truncation L+2 changes the wedge")
    if wedge(A, B, reverse=True) != wedge(B, A):
        out.append("the reverse flag is not the opposite orientation")
    if not (W.contains(A) and W.contains(B)):
        out.append("wedge does not contain A + B")
    G = A.quiver
    VA, VB = set(A.vertices()), set(B.vertices())
    if set(W.vertices()) != VA | VB:
        out.append(f"V(A^B) = {W.vertices()} differs from V(A) u V(B)")
    expect = set(A.arrows()) | set(B.arrows()) | {a.name for a in G.arrows if a.source in VA and a.tail in VB}
    if set(W.arrows()) != expect:
        out.append(f"E(A^B) = {sorted(W.arrows())}, expected {sorted(expect)}")
    one = A.field.one
    pa = [p for p in A.paths() if A.member(Vector.basis(p, one))]
    pb = [p for p in B.paths() if B.member(Vector.basis(p, one))]
    for p1, p2 in itertools.product(pa, pb):
        if p1.tail == p2.source:
            if not W.member(Vector.basis(concat(p1, p2), one)):
                out.append(f"{p1}{p2} is missing from A^B")
        for x in G.out_arrows(p1.tail):
            if x.tail == p2.source:
                q = concat(concat(p1, G.path(x.name)), p2)
                if not W.member(Vector.basis(q, one)):
                    out.append(f"{q} is missing from A^B")
    return out


def check_coidempotent_pathsub(D: PathSub) -> list[str]:
    out = []
    dec = is_coidempotent(D)
    full = D.sub == D.quiver.full_subquiver(D.sub.vertices)
    if bool(dec) != full:
        out.append(f"coidempotence {bool(dec)} but full={full}")
    if D.finite:
        F = D.to_finite()
        if bool(dec) != (wedge(F, F) == F):
            out.append("coidempotence verdict disagrees with computing D^D")
    elif not dec:
        x = dec.witness
        sub = FiniteDim.from_paths(D.quiver, D.field,
                                   [trivial(D.quiver.arrow(x).source), trivial(D.quiver.arrow(x).tail)])
        if not wedge(sub, sub).member(Vector.basis(D.quiver.path(x), D.field.one)):
            out.append(f"missing arrow {x} is not in the wedge of its endpoints")
    return out


# primeness laws


def check_prime(D: Subcoalgebra) -> list[str]:
    out = []
    v = is_prime(D)
    if v.prime and not is_connected(D.associated_quiver()):
        out.append("prime but G(D) is disconnected")
    if v.prime and isinstance(D, (FiniteDim, TruncatedPC)):
        F = D.to_finite()
        if F.dim != 1:
            out.append("finite-dimensional prime coalgebra is not simple")
    if v.not_prime:
        A, B = v.witness
        if not verify_witness(D, A, B):
            out.append(f"witness for {v.reason} does not verify")
    if v.prime:
        for r in derived_reps_prime(D):
            if not r.prime:
                out.append(f"a derived representation is not prime: {r.reason}")
    return out


def check_pathsub_prime(D: PathSub) -> list[str]:
    out = []
    v = is_prime(D)
    if not D.sub.vertices:
        return out
    sc = bool(strongly_connected(D.sub))
    oe = bool(ordered_embedding_condition(D))
    pairs = all(reachable(D.sub, a, b) is not None for a in D.sub.vertices for b in D.sub.vertices)
    if not (v.prime == sc == oe == pairs):
        out.append(f"is_prime={v.prime}, strongly connected={sc}, ordered embedding={oe}, pairs={pairs}")
    return out + check_prime(D)


def check_cycles(D: Subcoalgebra, max_length: int = 4, max_n: int = 4) -> list[str]:
    out = []
    for q in D.paths(max_length):
        for n in range(1, max_n + 1):
            c = find_cycle_through(D, q, n)
            if c is None:
                out.append(f"no cycle through {q} (n={n})")
            elif not (c.is_cycle and D.contains_path(c) and max_disjoint_occurrences(q, c) >= n):
                out.append(f"cycle {c} for {q} (n={n}) fails the occurrence counter")
    return out


def check_brute_force(ambient: FiniteDim, max_dim: int = 4) -> tuple[int, list[str]]:
    subs = enumerate_subcoalgebras(ambient)
    out, cases = [], 0
    for D in subs:
        if D.dim == 0 or D.dim > max_dim:
            continue
        cases += 1
        fast, slow = is_prime(D), brute_force_prime(D, ambient, subs)
        if fast.status != slow.status:
            out.append(f"{[str(r) for r in D.rows]}: is_prime {fast.status.value}, brute force {slow.status.value}")
    return cases, out


# reduction laws


def check_intertwining(S: VertexIdempotent, d: Vector) -> list[str]:
    if reduced_delta(S, phi(S, d)) != phi_tensor(S, delta(d)):
        return [f"reduced delta of phi({d}) differs from (phi x phi) delta"]
    return []


def check_reduced_wedge(A: FiniteDim, B: FiniteDim, S: VertexIdempotent) -> list[str]:
    W = wedge(A, B)
    pa, pb = phi_space(S, A.space), phi_space(S, B.space)
    bad = [r for r in W.rows if not reduced_wedge_contains(S, pa, pb, phi(S, r))]
    return [f"phi({bad[0]}) is not in phi(A)^phi(B)"] if bad else []


def check_preimage_coproduct(S: VertexIdempotent, H: Subspace, d: Vector) -> list[str]:
    """If ``phi(d)`` lies in H then ``(phi x phi) delta(d)`` lies in H (x) H."""
    one = H.field.one
    if not H.member(phi(S, d)):
        return []
    left, right = Vector(), Vector()
    for (p, q), c in phi_tensor(S, delta(d)).items():
        left = left.axpy(c, tensor(H.reduce(Vector.basis(p, one)), Vector.basis(q, one)))
        right = right.axpy(c, tensor(Vector.basis(p, one), H.reduce(Vector.basis(q, one))))
    return [f"(phi x phi) delta({d}) leaves H (x) H"] if left or right else []


def supported_sets(G: Quiver, max_size: int | None = None) -> list[frozenset]:
    vs = G.vertices
    top = len(vs) if max_size is None else min(max_size, len(vs))
    return [frozenset(c) for k in range(1, top + 1) for c in itertools.combinations(vs, k)]


def check_local_reduction(D: Subcoalgebra) -> list[str]:
    out = []
    v = is_prime(D)
    if v.prime:
        for S in supported_sets(D.quiver):
            try:
                red = reduce_subcoalgebra(D, S)
            except InfiniteCondensation:
                continue
            if red.zero:
                continue
            rv = is_prime(red.rep)
            if not rv.prime:
                out.append(f"reduction to {sorted(S)} is {rv.status.value}")
    prof = local_prime_profile(D)
    agg = prof.aggregate
    if not v.unsupported and agg.value != "unsupported" and agg != v.status:
        out.append(f"local aggregate {agg.value} but is_prime {v.status.value}")
    return out


def check_reduction_roundtrip(D: FiniteDim) -> list[str]:
    """Reducing by a set containing V(D) gives D back."""
    red = reduce_subcoalgebra(D, set(D.quiver.vertices))
    if red.zero:
        return [] if D.dim == 0 else ["full reduction is zero"]
    if red.ambient_space() != D.space:
        return ["reduction over all vertices changed D"]
    return []


# drivers


def _seeded_closures(rng: random.Random, count: int, F: Field = QQ) -> list[FiniteDim]:
    out = []
    while len(out) < count:
        G = random_quiver(rng, 4, 6)
        D = random_closure(rng, G, F)
        if D.dim:
            out.append(D)
    return out


def suite_closure_laws(seed: int, corpus: list[Subcoalgebra], count: int = 40) -> CheckResult:
    res = CheckResult("subcoalgebra laws")
    rng = random.Random(seed)
    finite = [D.to_finite() for D in corpus if D.finite]
    for i, D in enumerate(finite + _seeded_closures(rng, count)):
        res.add(f"instance {i}", check_subcoalgebra(D))
    for i in range(count):
        G = random_quiver(rng, 4, 6)
        g1, g2 = random_element(rng, G), random_element(rng, G)
        A = closure([g1], G)
        B = closure([g1, g2], G)
        res.add(f"monotone {i}", check_monotone(A, B))
    return res


def suite_wedge(seed: int, count: int = 100) -> CheckResult:
    res = CheckResult("wedge laws")
    for F in (QQ, GF2):
        rng = random.Random(seed)
        for i in range(count):
            A, B = random_wedge_pair(rng, F)
            res.add(f"{F!r} pair {i}", check_wedge(A, B))
    return res


def suite_coidempotence(seed: int, count: int = 60) -> CheckResult:
    res = CheckResult("coidempotence")
    rng = random.Random(seed)
    for i in range(count):
        G = random_quiver(rng, 5, 8)
        vs = rng.sample(G.vertices, rng.randint(1, len(G.vertices)))
        full = PathSub.induced(G, vs)
        res.add(f"full {i}", check_coidempotent_pathsub(full))
        arrows = [a.name for a in full.sub.arrows if rng.random() < 0.5]
        res.add(f"partial {i}", check_coidempotent_pathsub(PathSub(G, vs, arrows)))
    return res


def suite_pathsub_prime(seed: int, count: int = 200) -> CheckResult:
    res = CheckResult("path subcoalgebra primeness")
    rng = random.Random(seed)
    for i in range(count):
        G = random_quiver(rng, 6, 10)
        res.add(f"quiver {i}", check_pathsub_prime(PathSub.full(G)))
    return res


def suite_prime(corpus: list[Subcoalgebra], seed: int, count: int = 30) -> CheckResult:
    res = CheckResult("primeness witnesses")
    rng = random.Random(seed)
    for i, D in enumerate(list(corpus) + _seeded_closures(rng, count)):
        res.add(f"instance {i}", check_prime(D))
    return res


def suite_cycles(corpus: list[Subcoalgebra], seed: int, count: int = 20) -> CheckResult:
    res = CheckResult("cycles through paths")
    rng = random.Random(seed)
    extra = []
    while len(extra) < count:
        G = random_quiver(rng, 4, 6)
        D = PathSub.full(G)
        if G.arrows and strongly_connected(G) and G.count_paths_up_to(4) <= 200:
            extra.append(D)
    for i, D in enumerate(list(corpus) + extra):
        if isinstance(D, (PathSub, CyclePowers)) and is_prime(D).prime and D.arrows():
            res.add(f"instance {i}", check_cycles(D))
    return res


def brute_force_ambients() -> list[FiniteDim]:
    ab = Quiver(["a", "b"], [("x", "a", "b")])
    tri = Quiver(["a1", "a2", "a3"], [("x1", "a3", "a1"), ("x2", "a1", "a2"), ("x3", "a2", "a3")])
    return [TruncatedPC(G, 2, GF2).to_finite() for G in (ab, tri)]


def suite_brute_force() -> CheckResult:
    res = CheckResult("brute-force primeness")
    for X in brute_force_ambients():
        cases, problems = check_brute_force(X)
        res.cases += cases
        res.failures.extend(problems)
    return res


def suite_reduce(corpus: list[Subcoalgebra], seed: int, count: int = 100) -> CheckResult:
    res = CheckResult("idempotent reduction")
    rng = random.Random(seed)
    for i in range(count):
        G = random_quiver(rng, 5, 8)
        S = VertexIdempotent(G, rng.sample(G.vertices, rng.randint(1, len(G.vertices))))
        res.add(f"intertwining {i}", check_intertwining(S, random_element(rng, G, QQ, 3, 4)))
    for i in range(count // 4):
        A, B = random_wedge_pair(rng)
        S = VertexIdempotent(A.quiver, rng.sample(A.quiver.vertices, rng.randint(1, len(A.quiver.vertices))))
        res.add(f"wedge image {i}", check_reduced_wedge(A, B, S))
        H = phi_space(S, A.space)
        for d in [phi(S, r) + random_element(rng, A.quiver) for r in A.rows[:3]]:
            res.add(f"preimage {i}", check_preimage_coproduct(S, H, d))
    for i, D in enumerate(list(corpus) + _seeded_closures(rng, count // 4)):
        res.add(f"local {i}", check_local_reduction(D))
        if isinstance(D, FiniteDim):
            res.add(f"roundtrip {i}", check_reduction_roundtrip(D))
    for i in range(count // 2):
        G = random_quiver(rng, 5, 7)
        res.add(f"local pathsub {i}", check_local_reduction(PathSub.full(G)))
    return res


SUITES: dict[str, Callable] = {
    "laws": lambda seed, corpus: suite_closure_laws(seed, corpus),
    "wedge": lambda seed, corpus: suite_wedge(seed),
    "coidempotence": lambda seed, corpus: suite_coidempotence(seed),
    "pathsub": lambda seed, corpus: suite_pathsub_prime(seed),
    "prime": lambda seed, corpus: suite_prime(corpus, seed),
    "cycles": lambda seed, corpus: suite_cycles(corpus, seed),
    "brute": lambda seed, corpus: suite_brute_force(),
    "reduce": lambda seed, corpus: suite_reduce(corpus, seed),
}


def run_all(corpus: list[Subcoalgebra], seed: int = 0, only: Iterable[str] | None = None) -> list[CheckResult]:
    names = list(SUITES) if only is None else list(only)
    return [SUITES[n](seed, corpus) for n in names]
