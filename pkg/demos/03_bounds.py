"""
Bounds on the two largest values
================================

Each inequality is returned as a BoundCheck holding the two sides, the
signed slack and whether equality was predicted structurally.  This sweep
runs the whole suite on a few named families and prints the tightest
cases.
"""

from distpareto import make_family
from distpareto.theorems import bound_suite, check_diff_cn

families = [("K", 6), ("W", 7), ("S", 6), ("S+", 6), ("P", 6), ("C", 6)]

# %%
for name, n in families:
    g = make_family(name, n)
    print(g.label)
    for c in bound_suite(g):
        flag = "=" if c.equality else " "
        print(f"  {c.name:13s} {c.relation:2s} slack={c.slack:9.5f} {flag} predicted={c.equality_predicted}")

# %%
# The cycle bound is strict from n = 4 on; at n = 3 it is an equality.
for n in range(3, 9):
    c = check_diff_cn(n)
    print(n, c.status, round(c.slack, 6))
