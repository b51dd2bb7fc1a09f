import json

import pytest
from hypothesis import given, strategies as st

from pathcoalg import fixtures
from pathcoalg.coalg import CyclePowers, FiniteDim, PathSub, TruncatedPC
from pathcoalg.document import DocumentError, format_element, format_tensor, parse_document, parse_element
from pathcoalg.pathspace import Vector, tensor
from pathcoalg.quiver import Quiver
from pathcoalg.scalars import QQ, PrimeField

G = Quiver(["a", "b", "c"], [("x", "a", "b"), ("z", "a", "b"), ("y", "b", "c"), ("t", "b", "c")])

HEADER = """\
vertex a
vertex b
vertex c
arrow x: a -> b
arrow z: a -> b
arrow y: b -> c
arrow t: b -> c
"""


def test_element_roundtrip_examples():
    for text in ["0", "1*a", "1*x + 1*z", "3*a + -1*b", "1/2*x.y + -2/3*z.t"]:
        v = parse_element(text, G)
        assert format_element(v, G) == text
    assert parse_element("x + z", G) == parse_element("1*x + 1*z", G)


def test_element_order_is_canonical():
    v = parse_element("1*z.t + 1*a + 2*x + 1*c", G)
    assert format_element(v, G) == "1*a + 1*c + 2*x + 1*z.t"


def test_element_cancels():
    assert parse_element("x + -1*x", G) == Vector()


@given(st.lists(st.tuples(st.sampled_from(G.paths_up_to(2)), st.fractions(max_denominator=5)), max_size=6))
def test_element_roundtrip_random(items):
    v = Vector(items)
    text = format_element(v, G)
    assert parse_element(text, G) == v
    # the JSON form is just the string; it survives a dump/load cycle
    assert parse_element(json.loads(json.dumps(text)), G) == v


def test_element_field():
    F = PrimeField(3)
    v = parse_element("4*a + 2*b", G, F)
    assert format_element(v, G, F) == "1*a + 2*b"


def test_format_tensor():
    a, x = parse_element("a", G), parse_element("x", G)
    assert format_tensor(tensor(a, x) + tensor(x, a), G) == "1*a(x)x + 1*x(x)a"
    assert format_tensor(Vector(), G) == "0"


def test_bad_elements():
    for text in ["x*2", "1*q", "x.y.z", "*x", ""]:
        with pytest.raises(Exception):
            parse_element(text, G)


def test_document_directives():
    doc = parse_document(HEADER + """
element alpha = x.y + x.t + z.y + z.t
subcoalgebra D = closure(alpha)
subcoalgebra F = pathsub(a, b; x, z)
subcoalgebra T = truncate(2)
subcoalgebra R = pathsub(a, b; x)
subcoalgebra W = wedge(R, F)
""")
    assert doc.get("D").dim == 6
    assert isinstance(doc.get("F"), PathSub)
    assert isinstance(doc.get("T"), TruncatedPC) and doc.get("T").bound == 2
    assert isinstance(doc.get("W"), FiniteDim)
    assert doc.get() is doc.get("W")
    assert list(doc.elements) == ["alpha"]


def test_cyclepowers_directive():
    doc = fixtures.load("xyz-powers")
    assert isinstance(doc.get(), CyclePowers)


def test_comments_and_blank_lines():
    doc = parse_document("# leading\n" + HEADER + "\n# middle\nsubcoalgebra B = pathsub(b; )  # trailing\n")
    assert doc.get("B").vertices() == ["b"]


def test_minimal_document():
    doc = parse_document("vertex v\nelement g = v\nsubcoalgebra D = closure(g)\n")
    assert doc.get().dim == 1


def test_no_subcoalgebra():
    with pytest.raises(KeyError):
        parse_document(HEADER).get()


@pytest.mark.parametrize("tail, line", [
    ("element alpha = x.z", 8),
    ("subcoalgebra D = closure(beta)", 8),
    ("subcoalgebra D = frobnicate(a)", 8),
    ("subcoalgebra D = wedge(A)", 8),
    ("element e = a\nelement e = b", 9),
    ("element e = a\nvertex d", 9),
    ("something else", 8),
    ("subcoalgebra D = pathsub(a; y)", 8),
])
def test_document_errors(tail, line):
    with pytest.raises(DocumentError) as info:
        parse_document(HEADER + tail + "\n")
    assert info.value.line == line
    assert info.value.column >= 1
    assert str(info.value).startswith(f"line {line}, column ")


def test_quiver_errors_carry_position():
    with pytest.raises(DocumentError) as info:
        parse_document("vertex a\narrow x: a -> q\n")
    assert info.value.line == 2


def test_field_is_respected():
    doc = fixtures.load("ex15", PrimeField(2))
    assert doc.field == PrimeField(2)
    assert doc.get("D").field == PrimeField(2)
    assert fixtures.load("ex15").field == QQ


def test_corpus_loads():
    assert set(fixtures.names()) >= {"ex15", "cycle3", "xyz-powers", "four-loops", "a-to-b", "single-vertex"}
    for name in fixtures.names():
        doc = fixtures.load(name)
        assert doc.subcoalgebras
