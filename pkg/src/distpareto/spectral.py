"""Symmetric-matrix numerics for distance submatrices.

The hot path is :func:`spectral_radius` (and its batched sibling
:func:`spectral_radii`): power iteration on ``M + n I`` started from the
normalised all-ones vector.  :func:`all_eigenvalues` is a cyclic Jacobi
solver kept as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .bounds import BoundCheck
from .errors import InvalidParameterError, NumericError

RESIDUAL_TOL = 1e-14
MAX_ITER = 100_000
DEDUP_TOL = 1e-9
JACOBI_TOL = 1e-12


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    perron: np.ndarray
    residual: float
    iterations: int = 0


def as_symmetric(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise InvalidParameterError("matrix is not symmetric")
    return a


def principal_submatrix(m, subset) -> np.ndarray:
    """Rows/columns of ``m`` selected by ``subset`` (a bitmask or an index sequence), in order."""
    a = np.asarray(m)
    idx = subset_indices(subset, a.shape[0])
    return a[np.ix_(idx, idx)]


def subset_indices(subset, n: int) -> list[int]:
    if isinstance(subset, (int, np.integer)):
        mask = int(subset)
        if mask <= 0 or mask >> n:
            raise InvalidParameterError(f"subset mask {mask:#x} empty or outside 0..{n - 1}")
        return [i for i in range(n) if mask >> i & 1]
    idx = sorted(int(i) for i in subset)
    if not idx:
        raise InvalidParameterError("empty vertex subset")
    if idx[0] < 0 or idx[-1] >= n or len(set(idx)) != len(idx):
        raise InvalidParameterError(f"subset {idx} invalid for order {n}")
    return idx


def _shift_for(a: np.ndarray) -> float:
    n = a.shape[0]
    if (a >= 0).all():
        return float(n)
    # indefinite input: make M + sI positive semidefinite
    return float(max(n, np.abs(a).sum(axis=1).max()))


def spectral_radius(m, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> SpectralResult:
    """Largest eigenvalue of a symmetric matrix with its unit eigenvector.

    Converges when ``||Mx - rho x||_inf / (rho + 1) <= tol`` (default 1e-14).  For a
    nonnegative irreducible matrix the returned vector is the Perron vector
    (strictly positive).
    """
    a = as_symmetric(m).astype(float)
    n = a.shape[0]
    if n == 1:
        return SpectralResult(float(a[0, 0]), np.ones(1), 0.0, 0)
    shift = _shift_for(a)
    x = np.ones(n)
    if (a < 0).any():
        x += np.arange(n) / (10.0 * n)  # avoid orthogonality for indefinite input
    x /= np.linalg.norm(x)
    rho = float(x @ a @ x)
    res = math.inf
    for it in range(1, max_iter + 1):
        y = a @ x
        rho = float(x @ y)
        r = y - rho * x
        res = float(np.abs(r).max())
        if res / (abs(rho) + 1.0) <= tol:
            break
        x = y + shift * x
        x /= np.linalg.norm(x)
    else:
        raise NumericError(f"power iteration did not converge in {max_iter} steps", residual=res)
    if x.sum() < 0:
        x = -x
    return SpectralResult(rho, x, res, it)


def spectral_radii(stack: np.ndarray, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER):
    """Batched :func:`spectral_radius` for nonnegative symmetric matrices.

    ``stack`` has shape ``(B, k, k)``.  Returns ``(radii, vectors, residuals)``.
    """
    a = np.asarray(stack, dtype=float)
    b, k, _ = a.shape
    if k == 1:
        return a[:, 0, 0].copy(), np.ones((b, 1)), np.zeros(b)
    shift = float(k)
    x = np.full((b, k), 1.0 / math.sqrt(k))
    radii = np.zeros(b)
    resid = np.full(b, np.inf)
    active = np.arange(b)
    for _ in range(max_iter):
        xa = x[active]
        y = np.einsum("bij,bj->bi", a[active], xa)
        rho = np.einsum("bi,bi->b", xa, y)
        res = np.abs(y - rho[:, None] * xa).max(axis=1)
        done = res / (np.abs(rho) + 1.0) <= tol
        radii[active] = rho
        resid[active] = res
        if done.all():
            active = active[:0]
            break
        keep = ~done
        xn = y[keep] + shift * xa[keep]
        xn /= np.linalg.norm(xn, axis=1)[:, None]
        active = active[keep]
        x[active] = xn
    if active.size:
        raise NumericError(
            f"batched power iteration: {active.size} matrices did not converge",
            residual=float(resid[active].max()),
        )
    return radii, x, resid


def all_eigenvalues(m, tol: float = JACOBI_TOL, max_sweeps: int = 100) -> list[float]:
    """Full spectrum by cyclic Jacobi rotations, in descending order."""
    a = as_symmetric(m).astype(float).copy()
    n = a.shape[0]
    if n > 64:
        raise InvalidParameterError(f"Jacobi oracle limited to n <= 64 (got {n})")
    for _ in range(max_sweeps):
        off = math.sqrt(float((np.triu(a, 1) ** 2).sum()) * 2)
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    else:
        raise NumericError("Jacobi sweeps exhausted", residual=off)
    return sorted(np.diag(a).tolist(), reverse=True)


def rayleigh(m, x) -> float:
    a = np.asarray(m, dtype=float)
    v = np.asarray(x, dtype=float)
    nrm = float(v @ v)
    if nrm == 0.0:
        raise InvalidParameterError("Rayleigh quotient of the zero vector")
    return float(v @ a @ v) / nrm


def avg_row_sum_bound(m) -> BoundCheck:
    """rho(M) >= mean row sum, with equality iff all row sums agree."""
    a = as_symmetric(m)
    sums = a.sum(axis=1)
    rho = spectral_radius(a).radius
    return BoundCheck(
        name="avg-row-sum",
        lhs=rho,
        rhs=float(sums.mean()),
        relation=">=",
        equality_predicted=bool((sums == sums[0]).all()),
        params={"min_row_sum": float(sums.min()), "max_row_sum": float(sums.max())},
    )


# ---------------------------------------------------------------------------
# dominance

EXHAUSTIVE_ORDER = 8


def _entrywise_dominates(a, b) -> bool:
    return bool((a >= b).all() and (a != b).any())


def dominates(a, b) -> bool:
    """Matrix dominance between nonnegative symmetric matrices.

    Case 1 (same order): some simultaneous permutation of ``a`` is entrywise
    ``>= b`` and differs.  Case 2 (``a`` larger): ``b`` appears exactly as a
    principal block of ``a`` whose complementary blocks are not all zero.
    Permutations are tried exhaustively up to order 8; above that only the
    identity arrangement (case 1) and order-preserving subsets (case 2) are tried.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    na, nb = a.shape[0], b.shape[0]
    if nb > na:
        return False
    exhaustive = na <= EXHAUSTIVE_ORDER
    if na == nb:
        if not exhaustive:
            return _entrywise_dominates(a, b)
        return any(_entrywise_dominates(a[np.ix_(p, p)], b) for p in permutations(range(na)))
    for subset in combinations(range(na), nb):
        rest = [i for i in range(na) if i not in subset]
        if not (a[np.ix_(rest, range(na))] != 0).any():
            continue  # complement blocks all zero
        arrangements = permutations(subset) if exhaustive else [subset]
        for p in arrangements:
            if np.array_equal(a[np.ix_(p, p)], b):
                return True
    return False
