"""
Pareto spectrum of a small graph
================================

Every principal submatrix of a distance matrix contributes its spectral
radius; the distinct values form the Pareto spectrum.  Here we compute it
for the star on four vertices and check one value with a certificate.
"""

import numpy as np

from distpareto import certificate_for, distance_matrix, make_family, pareto_spectrum, verify_pareto

# %%
# The star S4 has centre 0 and leaves 1, 2, 3.
g = make_family("S", 4)
d = distance_matrix(g)
print(d)

# %%
# Fifteen subsets, six distinct values.  Each comes with the first subset
# (smallest size, then smallest bitmask) that realises it.
spec = pareto_spectrum(g)
for value, subset in zip(spec.values, spec.witness_sets()):
    print(f"{value:10.6f}  {subset}")

# %%
# The three leaves are pairwise at distance 2, so their block is 2(J - I)
# with radius 4.  The certificate pads the block's Perron vector with zeros.
cert = certificate_for(d, [1, 2, 3])
print("lambda =", cert.lam, "x =", np.round(cert.x, 6))
print("verified:", verify_pareto(d, cert.lam, cert.x))

# %%
# mu(k) counts from the bottom, rho(k) from the top.
print("mu4 =", spec.mu(4), " rho1 =", spec.rho(1), " rho2 =", spec.rho(2))
