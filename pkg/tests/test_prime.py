import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from pathcoalg import checks
from pathcoalg.coalg import CyclePowers, FiniteDim, PathSub, TruncatedPC, closure, wedge
from pathcoalg.document import parse_element
from pathcoalg.pathspace import Vector
from pathcoalg.prime import (Status, brute_force_prime, common_superpath, derived_reps_prime, embedding_witness,
                             enumerate_subcoalgebras, find_cycle_through, is_prime, ordered_embedding_condition,
                             prime_implies_connected, verify_witness)
from pathcoalg.quiver import Quiver, power, trivial, strongly_connected
from pathcoalg.scalars import QQ, PrimeField

GF2 = PrimeField(2)
TRI = Quiver(["a1", "a2", "a3"], [("x1", "a3", "a1"), ("x2", "a1", "a2"), ("x3", "a2", "a3")])
AB = Quiver(["a", "b"], [("x", "a", "b")])
LOOPY = Quiver(["a", "b"], [("x", "a", "b"), ("y", "b", "b"), ("z", "b", "a")])


def test_three_cycle_prime():
    v = is_prime(PathSub.full(TRI))
    assert v.prime and v.status is Status.PRIME


def test_a_to_b_not_prime():
    D = PathSub.full(AB)
    v = is_prime(D)
    assert v.not_prime
    A, B = v.witness
    assert A.vertices() == ["a"] and not A.arrows()
    assert B.vertices() == ["b"] and not B.arrows()
    W = wedge(A.to_finite(), B.to_finite())
    assert W == D.to_finite() and W.dim == 3
    assert verify_witness(D, A, B)
    assert not verify_witness(D, B, A)


def test_ex15_not_prime(ex15):
    D = ex15.get("D")
    v = is_prime(D)
    assert v.not_prime
    A, B = v.witness
    assert verify_witness(D, A, B)
    assert not A.contains(D) and not B.contains(D)


def test_cycle_powers_prime(xyz):
    assert is_prime(xyz.get()).prime


def test_single_vertex_prime():
    D = FiniteDim.from_paths(AB, QQ, [trivial("a")])
    assert is_prime(D).prime


def test_zero_unsupported():
    v = is_prime(FiniteDim.zero(AB))
    assert v.unsupported and not v.prime and not v.not_prime


def test_truncated_verdicts():
    assert is_prime(TruncatedPC(TRI, 0)).not_prime
    v = is_prime(TruncatedPC(TRI, 2))
    assert v.not_prime
    A, B = v.witness
    assert verify_witness(TruncatedPC(TRI, 2), A, B)


def test_four_loop(four_loops):
    D = four_loops.get("D")
    assert D.dim == 23
    full, pc = derived_reps_prime(D)
    assert full.not_prime and pc.prime


def test_derived_reps_cycle(xyz):
    a, b = derived_reps_prime(xyz.get())
    assert a.prime and b.prime


def test_prime_implies_connected(ex15, cycle3):
    for D in (ex15.get("D"), cycle3.get()):
        assert prime_implies_connected(D, is_prime(D))


@pytest.mark.parametrize("seed", range(200))
def test_pathsub_matches_networkx(seed):
    rng = random.Random(seed)
    G = checks.random_quiver(rng, 6, 10)
    N = nx.MultiDiGraph()
    N.add_nodes_from(G.vertices)
    N.add_edges_from((a.source, a.tail) for a in G.arrows)
    expect = nx.is_strongly_connected(N)
    v = is_prime(PathSub.full(G))
    assert v.prime == expect
    assert v.not_prime == (not expect)
    if v.not_prime:
        assert verify_witness(PathSub.full(G), *v.witness)


# ordered embedding


def test_embedding_fails_on_a_to_b():
    d = ordered_embedding_condition(PathSub.full(AB))
    assert not d
    p1, p2 = d.witness
    assert p1 == AB.path("x") and p2 == AB.path("x")


def test_embedding_cycle_powers():
    D = CyclePowers(LOOPY, LOOPY.path("x", "y", "z"))
    assert ordered_embedding_condition(D)
    q, i = embedding_witness(D, LOOPY.path("z"), LOOPY.path("x"))
    assert q == power(D.root, 2) and i == 3


def test_embedding_single_vertex():
    assert ordered_embedding_condition(FiniteDim.from_paths(AB, QQ, [trivial("b")]))


def test_embedding_finite_counterexample(ex15):
    assert not ordered_embedding_condition(ex15.get("D"))


# constructive cycles


def test_cycle_through_examples():
    D = PathSub.full(TRI)
    c = find_cycle_through(D, TRI.path("x1", "x2"), 2)
    assert str(c) == "x1.x2.x3.x1.x2.x3"
    E = CyclePowers(LOOPY, LOOPY.path("x", "y", "z"))
    c = find_cycle_through(E, LOOPY.path("y", "z"), 3)
    assert c.is_cycle and str(c) == "x.y.z.x.y.z.x.y.z"


def test_cycle_through_failures():
    assert find_cycle_through(PathSub.full(AB), AB.path("x"), 1) is None
    with pytest.raises(ValueError):
        find_cycle_through(CyclePowers(LOOPY, LOOPY.path("x", "y", "z")), LOOPY.path("x", "z"), 1)
    with pytest.raises(ValueError):
        find_cycle_through(PathSub.full(TRI), TRI.path("x1"), 0)


def test_common_superpath_examples():
    D = PathSub.full(TRI)
    q = common_superpath(D, parse_element("x1 + x2", TRI), 1)
    assert str(q) == "x1.x2"
    E = CyclePowers(LOOPY, LOOPY.path("x", "y", "z"))
    q = common_superpath(E, parse_element("x + z", LOOPY), 2)
    assert q == power(E.root, 2)
    assert str(common_superpath(PathSub.full(AB), parse_element("x + a", AB), 1)) == "x"
    two = Quiver(["a", "b"], [])
    assert common_superpath(PathSub.full(two), parse_element("a + b", two), 1) is None


@given(st.integers(0, 10 ** 6))
def test_cycles_random_strongly_connected(seed):
    rng = random.Random(seed)
    G = checks.random_quiver(rng, 4, 7)
    # a lone vertex without loops is strongly connected but carries no cycle
    if not (G.arrows and strongly_connected(G)):
        return
    assert checks.check_cycles(PathSub.full(G), 3, 3) == []


# brute force


def test_enumerate_a_to_b():
    X = TruncatedPC(AB, 2, GF2).to_finite()
    subs = enumerate_subcoalgebras(X)
    # 0, span{a}, span{b}, span{a,b}, span{a,b,x}
    assert len(subs) == 5
    assert all(isinstance(S, FiniteDim) for S in subs)


def test_brute_force_examples():
    X = TruncatedPC(AB, 2, GF2).to_finite()
    assert brute_force_prime(X, X).not_prime
    a = FiniteDim.from_paths(AB, GF2, [trivial("a")])
    assert brute_force_prime(a, X).prime
    ab = FiniteDim.from_paths(AB, GF2, [trivial("a"), trivial("b")])
    assert brute_force_prime(ab, X).not_prime


def test_brute_force_guard():
    X = TruncatedPC(AB, 2, GF2).to_finite()
    with pytest.raises(ValueError):
        brute_force_prime(FiniteDim.from_paths(AB, QQ, [trivial("a")]), X)
    with pytest.raises(ValueError):
        brute_force_prime(FiniteDim.zero(AB, GF2), X)
    big = Quiver(["a"], [("x", "a", "a"), ("y", "a", "a")])
    T = TruncatedPC(big, 2, GF2).to_finite()
    with pytest.raises(ValueError):
        brute_force_prime(T, T)


def test_brute_force_ex15_guard():
    # closure(alpha) has dimension 6, above the oracle's limit of 5
    G = Quiver(["a", "b", "c"], [("x", "a", "b"), ("z", "a", "b"), ("y", "b", "c"), ("t", "b", "c")])
    D = closure([parse_element("x.y + x.t + z.y + z.t", G, GF2)], G, GF2)
    with pytest.raises(ValueError):
        brute_force_prime(D, TruncatedPC(G, 2, GF2).to_finite())


def test_brute_force_agrees():
    res = checks.suite_brute_force()
    assert res.ok, res.failures
    assert res.cases >= 10
