import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pathcoalg import Quiver, fixtures
from pathcoalg.scalars import PrimeField

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GF2 = PrimeField(2)


@pytest.fixture
def ex15():
    return fixtures.load("ex15")


@pytest.fixture
def cycle3():
    return fixtures.load("cycle3")


@pytest.fixture
def xyz():
    return fixtures.load("xyz-powers")


@pytest.fixture
def four_loops():
    return fixtures.load("four-loops")


@pytest.fixture
def a_to_b():
    return fixtures.load("a-to-b")


@st.composite
def quivers(draw, max_vertices=5, max_arrows=8, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    m = draw(st.integers(0, max_arrows))
    ends = draw(st.lists(st.tuples(st.sampled_from(vs), st.sampled_from(vs)), min_size=m, max_size=m))
    return Quiver(vs, [(f"e{j}", s, t) for j, (s, t) in enumerate(ends)])


@st.composite
def quiver_paths(draw, G, max_length=4):
    """A random path of G, grown one arrow at a time."""
    from pathcoalg.quiver import trivial, concat
    p = trivial(draw(st.sampled_from(G.vertices)))
    for _ in range(draw(st.integers(0, max_length))):
        outs = G.out_arrows(p.tail)
        if not outs:
            break
        a = draw(st.sampled_from(outs))
        p = concat(p, G.path(a.name))
    return p



ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion and assert it."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def report(number, title, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
