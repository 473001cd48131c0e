"""Walk through the local rings and the comparison isomorphism.

Run:  python3 demos/01_local_model.py
"""

from ogcoh.algebra import AlgebraMorphism, hilbert_function
from ogcoh.towers import local_model_suite, local_rings

rings = local_rings()

print("Four rings over a point, with their Hilbert functions:")
for key, alg in rings.items():
    print(f"  {alg!r}")
    print(f"      dims {list(hilbert_function(alg, 8))}")

# The two P^1-bundles over the Lagrangian Grassmannian and over P^3 are the
# same space; on cohomology the identification sends xi to zeta.
pgu, pl = rings["P_G(U)"], rings["P(L+/L)"]
phi = AlgebraMorphism(pgu, pl, {"xi": "zeta", "u1": "zeta + h", "u2": "zeta*h"})
print("\nComparison map, degree by degree:")
for d in range(0, 9, 2):
    m = phi.matrix(d)
    print(f"  degree {d}: {m.rows}x{m.cols}, rank {m.rank()}")

print("\nu1^2 goes to", pl.format(phi.apply(pgu.poly("u1**2"))), "and u1^2 = 2 u2 upstairs.")

print("\nFull suite:")
for c in local_model_suite().checks:
    print(f"  {'ok ' if c.ok else 'BAD'} {c.name}")
