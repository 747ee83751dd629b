"""
Fifth and sixth smallest values without enumeration
===================================================

The first four Pareto values are the same for every non-complete graph:
0, 1, 2 and 1+sqrt(3).  The fifth and sixth depend on clique number,
diameter and a few induced patterns.  The classifiers read those off and
we compare them with brute force on every connected graph of order six.
"""

import collections
import pathlib

from distpareto import classify_mu5, classify_mu6, pareto_spectrum, read_graph6

corpus = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data" / "connected_n6.g6"
graphs = [r.graph for r in read_graph6(corpus.read_text().splitlines())]
print(len(graphs), "connected graphs on six vertices")

# %%
# Tally which rule fired and check each prediction against enumeration.
rules = collections.Counter()
mismatches = 0
for g in graphs:
    if g.is_complete():
        continue
    spec = pareto_spectrum(g)
    v5, v6 = classify_mu5(g), classify_mu6(g)
    rules[(v5.symbol, v6.symbol, v6.rule)] += 1
    mismatches += abs(v5.value - spec.mu(5)) > 1e-9 or abs(v6.value - spec.mu(6)) > 1e-9

for (s5, s6, rule), count in sorted(rules.items(), key=lambda kv: -kv[1]):
    print(f"{count:4d}  mu5={s5:10s} mu6={s6:10s} [{rule}]")
print("mismatches:", mismatches)
