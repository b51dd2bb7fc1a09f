"""
Deciding primeness
==================

``is_prime`` dispatches on how a subcoalgebra is represented and returns a
verdict together with the reason and, when the answer is negative, a pair
``(A, B)`` with ``D`` inside ``A ^ B`` but in neither.
"""

from pathcoalg import fixtures, is_prime, verify_witness
from pathcoalg.coalg import associated_quiver
from pathcoalg.prime import derived_reps_prime, find_cycle_through

# path coalgebras: strong connectivity decides
for name in ("cycle3", "a-to-b"):
    D = fixtures.load(name).get()
    v = is_prime(D)
    print(f"{name:8} {v.status.value:10} {v.reason}")
    if v.not_prime:
        A, B = v.witness
        print("          witness", A.describe(), "|", B.describe(), "valid:", verify_witness(D, A, B))

# finite-dimensional coalgebras are prime only when simple
D = fixtures.load("ex15").get("D")
print("ex15     ", is_prime(D).status.value, "-", is_prime(D).reason)

# powers of a cycle are prime even though they do not form a path coalgebra
doc = fixtures.load("xyz-powers")
C = doc.get()
print("xyz      ", is_prime(C).status.value)
print("xz in G(D) but not in P(D):", associated_quiver(C).contains_path(doc.quiver.path("x", "z")),
      C.contains_path(doc.quiver.path("x", "z")))

# in a prime coalgebra every path sits on a cycle as often as we like
q = doc.quiver.path("y", "z")
print("cycle carrying y.z three times:", find_cycle_through(C, q, 3))

# the four-loop wedge uses every arrow yet is not prime, while its quiver is
D = fixtures.load("four-loops").get()
full, pc = derived_reps_prime(D)
print("four loops: D", full.status.value, "/ PC(G(D))", pc.status.value)
