"""
Scanning a corpus for counterexamples
=====================================

The scanner groups a graph6 stream by order and compares every graph with
the conjectured extremal one.  A guard band keeps floating-point noise from
producing counterexamples; near ties are listed separately.
"""

import pathlib

from distpareto import scan_conjectures

data = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data"
lines = [line for n in range(2, 7) for line in (data / f"connected_n{n}.g6").read_text().splitlines()]

# %%
# Conjectures 2 and 3 bound the gap between the two largest values.
for rep in scan_conjectures(lines, [2, 3]):
    print(f"conjecture {rep.conjecture}: {rep.graphs_scanned} graphs, {len(rep.counterexamples)} counterexamples")
    for e in rep.extremal:
        print(f"  n={e['n']} {e['kind']}: {e['name']} = {e['value']:.6f}")

# %%
# Conjecture 4 puts the minimum of the k largest values at the star.  The
# complete graph does better, so the scan reports counterexamples.
(rep,) = scan_conjectures(lines, [4], k_values=[1])
for c in rep.counterexamples[:5]:
    print(f"  n={c['n']} {c['graph6']}: sum {c['sum']:.6f} < star {c['bound']:.6f}")
