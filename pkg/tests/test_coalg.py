import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pathcoalg import checks
from pathcoalg.coalg import (AmbientMismatch, CyclePowers, FiniteDim, NotASubcoalgebra, PathSub, TruncatedPC,
                             arrows_of, associated_quiver, closure, convolve, coradical, counit, delta,
                             delta_closed, dual, hit_left, hit_right, homogeneous_components,
                             is_coidempotent, path_coalgebra_of, path_in_P, paths_of, span_of_paths,
                             vertices_of, wedge, wedge_dual_oracle, wedge_power)
from pathcoalg.document import parse_element
from pathcoalg.pathspace import Subspace, Vector, tensor
from pathcoalg.quiver import Quiver, trivial
from pathcoalg.scalars import QQ, PrimeField

EX15 = Quiver(["a", "b", "c"], [("x", "a", "b"), ("z", "a", "b"), ("y", "b", "c"), ("t", "b", "c")])
AB = Quiver(["a", "b"], [("x", "a", "b")])
LOOP = Quiver(["a"], [("x", "a", "a")])
FOUR = Quiver(["a"], [(n, "a", "a") for n in "xyzt"])
LOOPY = Quiver(["a", "b"], [("x", "a", "b"), ("y", "b", "b"), ("z", "b", "a")])


def el(G, text):
    return parse_element(text, G)


def span(G, *texts):
    return FiniteDim.from_vectors(G, QQ, [el(G, t) for t in texts])


ALPHA = "x.y + x.t + z.y + z.t"


# comultiplication and counit


def test_delta_examples():
    a = el(EX15, "a")
    assert delta(a) == tensor(a, a)
    x = el(AB, "x")
    assert delta(x) == tensor(el(AB, "a"), x) + tensor(x, el(AB, "b"))
    alpha = el(EX15, ALPHA)
    expect = (tensor(el(EX15, "a"), alpha) + tensor(el(EX15, "x + z"), el(EX15, "y + t"))
              + tensor(alpha, el(EX15, "c")))
    assert delta(alpha) == expect


def test_counit_examples():
    assert counit(el(EX15, "a")) == 1
    assert counit(el(EX15, "x")) == 0
    assert counit(el(EX15, "3*a + -1*b")) == 2


@given(st.lists(st.tuples(st.sampled_from(EX15.paths_up_to(2)), st.integers(-3, 3)), max_size=5))
def test_counit_laws(items):
    d = Vector((p, Fraction(c)) for p, c in items)
    left, right = Vector(), Vector()
    for (p, q), c in delta(d).items():
        left = left.axpy(c * counit(Vector.basis(p, Fraction(1))), Vector.basis(q, Fraction(1)))
        right = right.axpy(c * counit(Vector.basis(q, Fraction(1))), Vector.basis(p, Fraction(1)))
    assert left == d == right


@given(st.lists(st.tuples(st.sampled_from(LOOPY.paths_up_to(3)), st.integers(-2, 2)), max_size=4))
def test_coassociativity(items):
    d = Vector((p, Fraction(c)) for p, c in items)
    one = Fraction(1)
    lhs, rhs = Vector(), Vector()
    for (p, q), c in delta(d).items():
        for (p1, p2), c2 in delta(Vector.basis(p, one)).items():
            lhs = lhs.axpy(c * c2, Vector.basis((p1, p2, q), one))
        for (q1, q2), c2 in delta(Vector.basis(q, one)).items():
            rhs = rhs.axpy(c * c2, Vector.basis((p, q1, q2), one))
    assert lhs == rhs


# hit actions


def test_hit_right_examples():
    assert hit_right(el(EX15, "x.y"), dual(EX15.path("x"))) == el(EX15, "y")
    assert hit_right(el(EX15, ALPHA), EX15.path("x")) == el(EX15, "y + t")
    assert hit_right(el(EX15, "a"), EX15.path("x")) == Vector()


def test_hit_left_examples():
    assert hit_left(EX15.path("y"), el(EX15, "x.y")) == el(EX15, "x")
    assert hit_left(trivial("c"), el(EX15, ALPHA)) == el(EX15, ALPHA)
    assert hit_left(trivial("b"), el(AB, "x")) == el(AB, "x")


@given(st.lists(st.tuples(st.sampled_from(LOOPY.paths_up_to(3)), st.integers(-2, 2)), max_size=4),
       st.sampled_from(LOOPY.paths_up_to(2)))
def test_hits_agree_with_coproduct(items, p):
    # d.p* = sum p*(d1) d2 and p*.d = sum d1 p*(d2), read straight off delta
    d = Vector((q, Fraction(c)) for q, c in items)
    one = Fraction(1)
    right, left = Vector(), Vector()
    for (q1, q2), c in delta(d).items():
        if q1 == p:
            right = right.axpy(c, Vector.basis(q2, one))
        if q2 == p:
            left = left.axpy(c, Vector.basis(q1, one))
    assert hit_right(d, p) == right
    assert hit_left(p, d) == left


def test_convolution_of_vertex_functionals():
    a, b = Vector({trivial("a"): 1}), Vector({trivial("b"): 1})
    assert convolve(a, a, 3) == a
    assert convolve(a, b, 3) == Vector()
    x = Vector({AB.path("x"): 1})
    assert convolve(a, x, 3) == x and convolve(x, b, 3) == x


# closure and P, V, E, G


def test_closure_ex15():
    D = closure([el(EX15, ALPHA)], EX15)
    assert D.dim == 6
    assert D.space == span(EX15, "a", "b", "c", "x + z", "y + t", ALPHA).space
    assert {str(p) for p in paths_of(D)} == {"a", "b", "c", "x", "y", "z", "t", "x.y", "x.t", "z.y", "z.t"}
    assert vertices_of(D) == ["a", "b", "c"]
    assert sorted(arrows_of(D)) == ["t", "x", "y", "z"]
    assert not D.member(el(EX15, "x"))
    assert len(PathSub.full(associated_quiver(D)).paths()) == 11


def test_closure_small():
    assert closure([el(EX15, "b")], EX15).space == span(EX15, "b").space
    assert closure([el(FOUR, "a + y")], FOUR).space == span(FOUR, "a", "y").space
    assert closure([], EX15).dim == 0


def test_not_a_subcoalgebra():
    with pytest.raises(NotASubcoalgebra):
        span(EX15, "x")


def test_path_in_p_cycle_powers():
    D = CyclePowers(LOOPY, LOOPY.path("x", "y", "z"))
    assert path_in_P(D, LOOPY.path("z", "x"))
    assert not path_in_P(D, LOOPY.path("x", "z"))
    assert LOOPY.contains_path(LOOPY.path("x", "z"))
    assert not path_in_P(D, LOOPY.path("y", "y"))


def test_p_of_vertex():
    assert paths_of(span(EX15, "b")) == [trivial("b")]
    G = associated_quiver(span(EX15, "b"))
    assert list(G.vertices) == ["b"] and not G.arrows


def test_cycle_powers_root():
    D = CyclePowers(LOOPY, LOOPY.path("x", "y", "z", "x", "y", "z"))
    assert D.root == LOOPY.path("x", "y", "z")
    assert D.paths(3) == CyclePowers(LOOPY, D.root).paths(3)


def test_homogeneous_components_examples():
    d = el(AB, "a + x")
    assert homogeneous_components(d, AB) == [("a", "a", el(AB, "a")), ("a", "b", el(AB, "x"))]
    assert homogeneous_components(el(EX15, ALPHA), EX15) == [("a", "c", el(EX15, ALPHA))]
    assert homogeneous_components(Vector(), EX15) == []


def test_truncated_and_pathsub():
    T = TruncatedPC(EX15, 1)
    assert T.to_finite().dim == 7 and T.contains_path(EX15.path("x"))
    P = PathSub(EX15, ["a", "b"], ["x"])
    assert P.to_finite().space == span(EX15, "a", "b", "x").space
    assert P.finite and not PathSub.full(LOOPY).finite


def test_derived_representations():
    D = closure([el(EX15, ALPHA)], EX15)
    K = span_of_paths(D)
    assert K.dim == 11 and K.contains(D)
    assert path_coalgebra_of(D).sub == EX15


# wedge


def test_wedge_examples():
    W = wedge(span(AB, "a"), span(AB, "b"))
    assert W.space == span(AB, "a", "b", "x").space
    assert wedge(span(LOOP, "a"), span(LOOP, "a")).space == span(LOOP, "a", "x").space


def test_four_loop_wedge():
    A = closure([el(FOUR, "a + y"), el(FOUR, "z + t")], FOUR)
    B = closure([el(FOUR, "y + z")], FOUR)
    assert (A.dim, B.dim) == (3, 2)
    W = wedge(A, B)
    for n in "xyzt":
        assert W.member(el(FOUR, n))
    assert W.contains(A) and W.contains(B)
    assert wedge_dual_oracle(A, B) == W


def test_wedge_orientation():
    A, B = span(AB, "a"), span(AB, "b")
    assert wedge(A, B, reverse=True) == wedge(B, A)
    assert wedge(B, A).space == span(AB, "a", "b").space


def test_wedge_mismatch():
    with pytest.raises(AmbientMismatch):
        wedge(span(AB, "a"), span(LOOP, "a"))
    with pytest.raises(AmbientMismatch):
        wedge(span(AB, "a"), FiniteDim.from_paths(AB, PrimeField(2), [trivial("a")]))


def test_dual_oracle_edge_cases():
    T = TruncatedPC(EX15, 2).to_finite()
    assert wedge_dual_oracle(T, T) == wedge(T, T)
    Z = FiniteDim.zero(AB)
    B = span(AB, "b")
    assert wedge(Z, B) == wedge_dual_oracle(Z, B)
    assert wedge(Z, B).space == span(AB, "b").space


def test_wedge_power_examples():
    A = span(LOOP, "a")
    assert wedge_power(A, 1) == A
    assert wedge_power(A, 3).space == span(LOOP, "a", "x", "x.x").space
    D = closure([el(EX15, ALPHA)], EX15)
    R = coradical(D)
    ns = [n for n in range(1, 5) if wedge_power(R, n).contains(D)]
    assert ns[0] == 3


def test_coradical_examples():
    D = closure([el(EX15, ALPHA)], EX15)
    assert coradical(D).space == span(EX15, "a", "b", "c").space
    assert coradical(span(EX15, "b")).space == span(EX15, "b").space
    assert coradical(TruncatedPC(EX15, 2)).dim == 3


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.sampled_from(["q", "f2"]))
def test_wedge_laws_random(seed, field):
    F = QQ if field == "q" else PrimeField(2)
    A, B = checks.random_wedge_pair(random.Random(seed), F)
    assert checks.check_wedge(A, B) == []


# coidempotence


def test_coidempotence_examples():
    assert is_coidempotent(PathSub(EX15, ["a", "b"], ["x", "z"]))
    d = is_coidempotent(PathSub(EX15, ["a", "b"], ["x"]))
    assert not d and d.witness == "z"
    D = closure([el(EX15, ALPHA)], EX15)
    d = is_coidempotent(D)
    assert not d and d.witness == el(EX15, "x")
    assert is_coidempotent(span(EX15, "b"))


def test_coidempotence_truncated():
    assert not is_coidempotent(TruncatedPC(EX15, 1))
    assert is_coidempotent(TruncatedPC(EX15, 2))
    assert not is_coidempotent(TruncatedPC(LOOP, 5))


def test_coidempotence_cycle_powers():
    tri = Quiver(["a1", "a2", "a3"], [("x1", "a3", "a1"), ("x2", "a1", "a2"), ("x3", "a2", "a3")])
    assert is_coidempotent(CyclePowers(tri, tri.path("x1", "x2", "x3")))
    assert not is_coidempotent(CyclePowers(LOOPY, LOOPY.path("x", "y", "z")))
    chord = Quiver(["a", "b"], [("x", "a", "b"), ("z", "b", "a"), ("w", "a", "b")])
    assert not is_coidempotent(CyclePowers(chord, chord.path("x", "z")))


@given(st.integers(0, 10 ** 6))
def test_coidempotence_random(seed):
    res = checks.suite_coidempotence(seed, count=3)
    assert res.ok, res.failures


# theorem suites on random closures


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6), st.sampled_from(["q", "f2", "f3"]))
def test_subcoalgebra_laws_random(seed, field):
    from pathcoalg.scalars import parse_field
    F = parse_field(field)
    rng = random.Random(seed)
    G = checks.random_quiver(rng, 4, 6)
    D = checks.random_closure(rng, G, F)
    assert checks.check_subcoalgebra(D) == []


def test_subcoalgebra_laws_corpus(ex15, four_loops):
    for doc in (ex15, four_loops):
        for D in doc.subcoalgebras.values():
            if D.finite:
                assert checks.check_subcoalgebra(D.to_finite()) == []


@given(st.integers(0, 10 ** 6))
def test_monotone_paths(seed):
    rng = random.Random(seed)
    G = checks.random_quiver(rng, 4, 6)
    g1, g2 = checks.random_element(rng, G), checks.random_element(rng, G)
    A, B = closure([g1], G), closure([g1, g2], G)
    assert B.contains(A)
    assert set(A.paths()) <= set(B.paths())


def test_delta_closed_reports_row():
    V = Subspace(EX15, QQ, [el(EX15, "a"), el(EX15, "x")])
    assert delta_closed(V) == el(EX15, "x")
