"""Distance Pareto spectra by principal-submatrix enumeration.

For a distance matrix the Pareto eigenvalues are exactly the spectral radii
of its principal submatrices, so the spectrum of an order-``n`` graph is
obtained from ``2**n - 1`` Perron computations.  Subsets are visited by
increasing size, then by increasing bitmask; the first subset reaching a
value is kept as its witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InvalidParameterError, NumericError, OutOfRangeError, ResourceError
from .graph_core import Graph, distance_matrix
from .spectral import (
    DEDUP_TOL,
    principal_submatrix,
    rayleigh,
    spectral_radii,
    spectral_radius,
    subset_indices,
)

ENUM_BUDGET = 18
CERT_TOL = 1e-10
VERIFY_TOL = 1e-9


def _as_dist(d) -> np.ndarray:
    if isinstance(d, Graph):
        return distance_matrix(d)
    return np.asarray(d)


@dataclass(frozen=True)
class ParetoSpectrum:
    values: tuple            # ascending distinct Pareto eigenvalues
    witnesses: tuple         # bitmask per value
    count_subsets: int

    def __len__(self):
        return len(self.values)

    def witness_sets(self) -> list[tuple[int, ...]]:
        return [tuple(i for i in range(m.bit_length()) if m >> i & 1) for m in self.witnesses]

    def mu(self, k: int) -> float:
        return self.values[_index(k, len(self.values))]

    def rho(self, k: int) -> float:
        return self.values[len(self.values) - 1 - _index(k, len(self.values))]


@dataclass(frozen=True)
class ParetoCertificate:
    lam: float
    J: int                   # bitmask of the support
    xi: np.ndarray           # positive Perron vector on J
    x: np.ndarray            # xi padded with zeros to the host order
    residual: float


def _index(k: int, size: int) -> int:
    if not 1 <= k <= size:
        raise OutOfRangeError(f"k={k} outside 1..{size} (|Pi(G)| = {size})", size=size)
    return k - 1


def subset_radii(d, budget: int = ENUM_BUDGET, masks=None):
    """Spectral radius of every principal submatrix, in enumeration order.

    Returns ``(masks, radii)`` as arrays.  ``masks`` (optional) restricts the
    work to a chunk of subsets; chunks can be processed independently and
    merged with :func:`merge_partials`.
    """
    a = _as_dist(d)
    n = a.shape[0]
    if n > budget:
        raise ResourceError(f"order {n} exceeds enumeration budget {budget}", required=n, budget=budget)
    if masks is None:
        masks = enumeration_order(n)
    masks = np.asarray(masks, dtype=np.int64)
    radii = np.empty(masks.size)
    sizes = np.array([bin(int(m)).count("1") for m in masks])
    for k in np.unique(sizes):
        pos = np.nonzero(sizes == k)[0]
        idx = np.array([[i for i in range(n) if int(masks[p]) >> i & 1] for p in pos])
        stack = a[idx[:, :, None], idx[:, None, :]]
        r, _, _ = spectral_radii(stack)
        radii[pos] = r
    return masks, radii


def enumeration_order(n: int) -> list[int]:
    """Nonempty bitmasks of ``0..n-1`` by popcount, then numeric value."""
    out = []
    for k in range(1, n + 1):
        out.extend(sorted(sum(1 << i for i in c) for c in combinations(range(n), k)))
    return out


def _order_key(mask: int) -> tuple[int, int]:
    return (bin(mask).count("1"), mask)


def merge_partials(partials, tol: float = DEDUP_TOL):
    """Merge ``(masks, radii)`` chunks into sorted distinct values with witnesses.

    Deterministic and independent of how the subsets were split.
    """
    pairs = []
    for masks, radii in partials:
        pairs.extend(zip((float(r) for r in radii), (int(m) for m in masks)))
    pairs.sort(key=lambda p: (p[0], _order_key(p[1])))
    values, witnesses = [], []
    group_start = None
    best = None
    for val, mask in pairs:
        if group_start is None or val - group_start > tol:
            if best is not None:
                values.append(best[0])
                witnesses.append(best[1])
            group_start = val
            best = (val, mask)
        elif _order_key(mask) < _order_key(best[1]):
            best = (val, mask)
    if best is not None:
        values.append(best[0])
        witnesses.append(best[1])
    return values, witnesses


def pareto_spectrum(d, budget: int = ENUM_BUDGET) -> ParetoSpectrum:
    """All distinct distance Pareto eigenvalues, ascending, each with a witness subset."""
    masks, radii = subset_radii(d, budget)
    values, witnesses = merge_partials([(masks, radii)])
    return ParetoSpectrum(tuple(values), tuple(witnesses), int(masks.size))


def mu(d, k: int, budget: int = ENUM_BUDGET) -> float:
    """k-th smallest distinct Pareto eigenvalue."""
    return pareto_spectrum(d, budget).mu(k)


def rho(d, k: int, budget: int = ENUM_BUDGET) -> float:
    """k-th largest distinct Pareto eigenvalue."""
    return pareto_spectrum(d, budget).rho(k)


def spectrum_size(d, budget: int = ENUM_BUDGET) -> int:
    return len(pareto_spectrum(d, budget))


def rho2_by_deletion(g: Graph) -> tuple[float, int]:
    """Second largest Pareto eigenvalue from single-vertex deletions.

    Only vertices of degree > 1 are deleted; ties go to the lowest vertex.
    Returns ``(rho2, deleted_vertex)``.  For ``n == 2`` the value is 0
    (singleton witness after deleting vertex 0).
    """
    if g.n < 2:
        raise InvalidParameterError("rho_2 needs at least two vertices")
    if g.n == 2:
        return 0.0, 0
    d = distance_matrix(g)
    best, arg = -np.inf, -1
    for v in range(g.n):
        if g.degree(v) <= 1:
            continue
        keep = [u for u in range(g.n) if u != v]
        r = spectral_radius(d[np.ix_(keep, keep)]).radius
        if r > best + DEDUP_TOL:
            best, arg = r, v
    return float(best), arg


def verify_pareto(d, lam: float, x, tol: float = VERIFY_TOL) -> bool:
    """Check ``Dx >= lam x`` entrywise and ``lam`` equal to the Rayleigh quotient."""
    a = np.asarray(_as_dist(d), dtype=float)
    v = np.asarray(x, dtype=float)
    if (v < 0).any():
        raise InvalidParameterError("Pareto eigenvectors must be entrywise nonnegative")
    if not v.any():
        raise InvalidParameterError("Pareto eigenvector must be nonzero")
    if not (a @ v >= lam * v - tol).all():
        return False
    return abs(rayleigh(a, v) - lam) <= tol


def certificate_for(d, subset) -> ParetoCertificate:
    """Complementarity certificate ``(lambda, J, xi)`` for the submatrix on ``subset``.

    ``xi`` is the Perron vector of the principal submatrix; off-support rows
    satisfy ``sum_j a_ij xi_j >= 0`` because distance entries are nonnegative.
    """
    a = _as_dist(d)
    n = a.shape[0]
    idx = subset_indices(subset, n)
    sub = principal_submatrix(a, idx)
    res = spectral_radius(sub)
    xi = np.abs(res.perron)
    x = np.zeros(n)
    x[idx] = xi
    lam = res.radius
    resid = float(np.abs(sub @ xi - lam * xi).max())
    if not (xi > 0).all() or resid > CERT_TOL:
        raise NumericError(f"certificate invariant failed on {idx}", residual=resid)
    outside = [i for i in range(n) if i not in idx]
    if outside and (a[np.ix_(outside, idx)] @ xi < 0).any():
        raise NumericError("complementarity sign condition failed")
    mask = sum(1 << i for i in idx)
    return ParetoCertificate(lam, mask, xi, x, resid)
