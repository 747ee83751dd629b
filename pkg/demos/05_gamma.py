"""
Two cubic roots near 4.1
========================

Two graphs on few vertices have sixth smallest value just above 4.  Two
triangles sharing a vertex give the largest root of x^3 - x^2 - 11x - 7.
The 7-cycle gives a slightly larger number, the radius of the distance
triangle with sides 1, 2, 3.
"""

import numpy as np

from distpareto import coalesce, make_family, pareto_spectrum
from distpareto.theorems import GAMMA, RHO_TRIANGLE_123

c3 = make_family("C", 3)
bowtie = coalesce(c3, 0, c3, 0)

# %%
print("largest root    :", max(np.roots([1, -1, -11, -7]).real))
print("mu6(C3*C3)      :", pareto_spectrum(bowtie).mu(6))
print("gamma           :", GAMMA)

# %%
# The 7-cycle has no vertex adjacent to three others, so the 4x4 block
# behind gamma is absent.  Its sixth value is the root of x^3 - 14x - 12.
spec = pareto_spectrum(make_family("C", 7))
print("mu6(C7)         :", spec.mu(6), "witness", spec.witness_sets()[5])
print("1-2-3 triangle  :", RHO_TRIANGLE_123, max(np.roots([1, 0, -14, -12]).real))
