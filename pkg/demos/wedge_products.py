"""
Wedges of subcoalgebras
=======================

``wedge(A, B)`` collects the elements whose coproduct lands in
``A (x) C + C (x) B``.  It is computed as a kernel on a truncated path space
and cross-checked against a dual description.
"""

from pathcoalg import FiniteDim, fixtures, wedge, wedge_dual_oracle, wedge_power
from pathcoalg.document import format_element
from pathcoalg.quiver import Quiver, trivial
from pathcoalg.scalars import QQ

# a single arrow x: a -> b
G = Quiver(["a", "b"], [("x", "a", "b")])
A = FiniteDim.from_paths(G, QQ, [trivial("a")])
B = FiniteDim.from_paths(G, QQ, [trivial("b")])

W = wedge(A, B)
print("span{a} ^ span{b} =", [format_element(r, G) for r in W.rows])

# the wedge is not symmetric
print("span{b} ^ span{a} =", [format_element(r, G) for r in wedge(B, A).rows])

# powers of the vertex at a loop pick up one more power of the loop each time
L = Quiver(["a"], [("x", "a", "a")])
V = FiniteDim.from_paths(L, QQ, [trivial("a")])
for n in (1, 2, 3):
    print(f"span{{a}}^{n} =", [format_element(r, L) for r in wedge_power(V, n).rows])

# four loops at one vertex: a larger example
doc = fixtures.load("four-loops")
A, B = doc.get("A"), doc.get("B")
W = wedge(A, B)
print("dim A, dim B, dim A^B =", A.dim, B.dim, W.dim)
print("dual description agrees:", wedge_dual_oracle(A, B) == W)
print("arrows of A^B:", W.arrows())
