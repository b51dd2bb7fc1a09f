"""
Reducing to a few vertices
==========================

Keeping only the paths that start and end in a vertex set ``S`` and
splitting them only at ``S`` gives a smaller coalgebra, carried by the
condensation of the quiver over ``S``.  Primeness can be read off the
reductions to one or two vertices.
"""

from pathcoalg import fixtures, is_prime
from pathcoalg.document import format_element, format_tensor
from pathcoalg.reduce import VertexIdempotent, local_prime_profile, reduce_subcoalgebra, reduced_delta

doc = fixtures.load("ex15")
G, D = doc.quiver, doc.get("D")

# keep a and c; every a -> c path becomes one condensed arrow
S = VertexIdempotent(G, {"a", "c"})
red = reduce_subcoalgebra(D, S)
print("condensed quiver:")
print(red.condensed.quiver.to_text())
print("reduction, read back in G:", [format_element(r, G) for r in red.ambient_space().rows])
print("reduced coproduct of x.y:", format_tensor(reduced_delta(S, G.path("x", "y")), G))
print("verdict:", is_prime(red.rep).status.value)

# the local profile over all one- and two-vertex sets
prof = local_prime_profile(D)
for e in prof.entries:
    status = "vacuous" if e.vacuous else e.verdict.status.value
    print(f"  {{{', '.join(sorted(set(e.pair)))}}}: {status}")
print("aggregate:", prof.aggregate.value, "  global:", is_prime(D).status.value)

# a cycle reduced to one of its vertices stays a cycle
C = fixtures.load("xyz-powers").get()
red = reduce_subcoalgebra(C, {"a"})
print("xyz over {a}:", red.rep.describe())
