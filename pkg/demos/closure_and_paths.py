"""
Closures, paths and the associated quiver
=========================================

A subcoalgebra can use every arrow of a quiver and still be much smaller
than the path coalgebra of those arrows.
"""

from pathcoalg import PathSub, associated_quiver, closure, fixtures, paths_of
from pathcoalg.document import format_element, parse_element
from pathcoalg.scalars import PrimeField

# two parallel arrows a -> b (x, z) followed by two parallel arrows b -> c (y, t)
doc = fixtures.load("ex15")
G = doc.quiver
print(G.to_text())

# close the sum of all four length-two paths under the coproduct
alpha = parse_element("x.y + x.t + z.y + z.t", G)
D = closure([alpha], G)
print("dim D =", D.dim)
for row in D.rows:
    print("   ", format_element(row, G))

# the paths appearing in D and the quiver they span
P = paths_of(D)
print("|P(D)| =", len(P), ":", ", ".join(map(str, P)))
H = associated_quiver(D)
PC = PathSub.full(H).to_finite()
print("dim PC(G(D)) =", PC.dim)

# x appears in D only through x + z
print("x in D?", D.member(parse_element("x", G)))
print("x + z in D?", D.member(parse_element("x + z", G)))

# the same construction over GF(2) gives the same dimension
F2 = PrimeField(2)
print("dim over GF(2) =", closure([parse_element("x.y + x.t + z.y + z.t", G, F2)], G, F2).dim)
