"""From the E1 page to Betti numbers.

The differential d1 is surjective in every degree, so each even Betti number
b_2k is squeezed between the Euler-type lower bound and the various upper
bounds, and b_2k+1 follows.  Run:  python3 demos/03_spectral_bounds.py
"""

from ogcoh.bounds import betti_bounds, theorem_check
from ogcoh.spectral import assemble_e1, euler_characteristic, verify_d1_surjective

for v in ("M", "K"):
    page = assemble_e1(v)
    print(f"== {v} ==")
    print("  q    e0      e1     e2   rank d0           rank d1")
    for q in range(0, page.top_degree + 1, 2):
        d0, d1 = page.d0_rank(q), page.d1_rank(q)
        print(f"  {q:<3}{page.e(0, q):>7}{page.e(1, q):>8}{page.e(2, q):>6}   "
              + f"[{d0.lower}, {d0.upper}]".ljust(18) + f"{d1.lower}")
    verify_d1_surjective(page)
    print("  d1 certified surjective; chi =", euler_characteristic(v))

    rep = betti_bounds(v)
    for e in rep:
        if e.degree % 2 == 0 or e.upper:
            print(f"  b{e.degree:<3} {str(e):<18} {', '.join(e.binding)}")
    for c in theorem_check(v).checks:
        print(f"  {'ok ' if c.ok else 'BAD'} {c.name}")
    for w in rep.warnings:
        print("  note:", w)
    print()
