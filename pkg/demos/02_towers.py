"""Build the Sigma- and Omega-towers for M and K and print both tables.

Run:  python3 demos/02_towers.py
"""

from ogcoh.towers import betti_tables, sigma_tower

for v in ("M", "K"):
    t = betti_tables(v)
    print(f"{v}: even Betti numbers, degrees 0..{t.top_degree}")
    for name, g in t.rows.items():
        evens = [g[d] for d in range(0, t.top_degree + 1, 2)]
        print(f"  {name:<11}" + "".join(f"{x:>8}" for x in evens))
    print("  matches reference:", t.ok)

    # the decomposition behind one row
    sb = sigma_tower(v).sigma_bar
    print(f"  {sb.name} = " + " + ".join(f"{s.label.split(':', 1)[1]}[-{s.shift}]" for s in sb))
    print()
