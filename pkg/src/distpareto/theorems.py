"""Closed forms, inequality checks and the mu_5 / mu_6 classifiers.

Bounds come back as :class:`~distpareto.bounds.BoundCheck` records carrying
both the numeric slack and the structural equality prediction, so a sweep
can compare the two.  The classifiers predict the fifth and sixth smallest
Pareto values from cheap structure (clique number, diameter, a handful of
induced patterns) without enumerating subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import EQ_TOL, BoundCheck
from .errors import InvalidParameterError, OutOfRangeError
from .graph_core import (
    PATTERNS,
    Graph,
    PatternId,
    clique_number,
    diameter,
    distance_matrix,
    find_induced,
    is_isomorphic,
    is_pyramidal,
    make_family,
)
from .pareto import ENUM_BUDGET, pareto_spectrum, rho2_by_deletion
from .spectral import spectral_radius

SQRT3 = math.sqrt(3)

# matrices whose spectral radii appear as classifier values
D_P4 = np.array([[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]])
GAMMA_MATRIX = np.array([[0, 1, 2, 2], [1, 0, 1, 1], [2, 1, 0, 1], [2, 1, 1, 0]])
# three vertices of a geodesic a-b-c-d: {a, b, d}; char. poly x^3 - 14x - 12
TRIANGLE_123 = np.array([[0, 1, 3], [1, 0, 2], [3, 2, 0]])


def gamma_polynomial(x: float) -> float:
    return x**3 - x**2 - 11 * x - 7


def gamma_root(tol: float = 1e-12) -> float:
    """Largest real root of x^3 - x^2 - 11x - 7 by bracketed Newton on [4, 5]."""
    lo, hi = 4.0, 5.0
    x = 5.0
    for _ in range(200):
        fx = gamma_polynomial(x)
        if fx < 0:
            lo = x
        else:
            hi = x
        step = fx / (3 * x * x - 2 * x - 11)
        nxt = x - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= tol:
            return nxt
        x = nxt
    return x


GAMMA = gamma_root()
RHO_D_P4 = spectral_radius(D_P4).radius
RHO_TRIANGLE_123 = spectral_radius(TRIANGLE_123).radius

MU5_VALUES = {
    "3": 3.0,
    "4": 4.0,
    "(3+√17)/2": (3 + math.sqrt(17)) / 2,
    "(1+√33)/2": (1 + math.sqrt(33)) / 2,
}
MU6_VALUES = {
    **MU5_VALUES,
    "5": 5.0,
    "2+√7": 2 + math.sqrt(7),
    "ρ(D(P4))": RHO_D_P4,
    "ρ(T123)": RHO_TRIANGLE_123,
    "(3+√37)/2": (3 + math.sqrt(37)) / 2,
    "γ": GAMMA,
}


# ---------------------------------------------------------------------------
# closed forms

def star_spectrum_closed_form(n: int) -> list[float]:
    """Pareto spectrum of the star S_n: {2(k-1)} ∪ {k-1+sqrt(k^2-k+1)}, k = 1..n-1."""
    if n < 2:
        raise InvalidParameterError("star needs n >= 2")
    vals = [2.0 * (k - 1) for k in range(1, n)]
    vals += [k - 1 + math.sqrt(k * k - k + 1) for k in range(1, n)]
    vals.sort()
    out = []
    for v in vals:
        if not out or v - out[-1] > EQ_TOL:
            out.append(v)
    return out


def rho2_snplus_closed_form(n: int) -> float:
    if n < 4:
        raise InvalidParameterError("S_n^+ closed form needs n >= 4")
    return (2 * n - 7 + math.sqrt((2 * n - 5) * (2 * n + 3))) / 2


def rho2_wheel_closed_form(n: int) -> float:
    if n < 5:
        raise InvalidParameterError("wheel closed form needs n >= 5 (W_4 is K_4)")
    return 2.0 * (n - 3)


def star_gap(n: int) -> float:
    """rho_1(S_n) - rho_2(S_n) = sqrt(n^2 - 3n + 3) - n + 2."""
    return math.sqrt(n * n - 3 * n + 3) - n + 2


# ---------------------------------------------------------------------------
# shared quantities

@dataclass(frozen=True)
class TopPair:
    rho1: float
    rho2: float
    perron: np.ndarray        # unit Perron vector of D(G)
    rho2_vertex: int          # vertex deleted to realise rho_2
    rho2_vector: np.ndarray   # Perron vector of that submatrix, zero-padded
    rho2_rows_equal: bool     # that submatrix has constant row sums


def top_pair(g: Graph) -> TopPair:
    d = distance_matrix(g)
    full = spectral_radius(d)
    r2, v = rho2_by_deletion(g)
    keep = [u for u in range(g.n) if u != v]
    sub = d[np.ix_(keep, keep)]
    z = np.zeros(g.n)
    z[keep] = np.abs(spectral_radius(sub).perron)
    sums = sub.sum(axis=1)
    return TopPair(full.radius, r2, np.abs(full.perron), v, z, bool((sums == sums[0]).all()))


def _min_positive(z: np.ndarray) -> float:
    return float(z[z > 0].min())


# ---------------------------------------------------------------------------
# rho_1 lower bounds

def check_r1_lower_family(g: Graph, t: float, pair: TopPair | None = None) -> BoundCheck:
    """rho_1 >= (rho_2 + 2tk(n-1)) / (1 + t^2), k = min positive entry of the rho_2 vector."""
    if t <= 0:
        raise InvalidParameterError("t must be positive")
    if g.n < 2:
        raise InvalidParameterError("needs n >= 2")
    p = pair or top_pair(g)
    n = g.n
    k = _min_positive(p.rho2_vector)
    rhs = (p.rho2 + 2 * t * k * (n - 1)) / (1 + t * t)
    s = math.sqrt(n - 1)
    predicted = abs(t - s / p.rho1) <= EQ_TOL and abs(t - (p.rho1 - p.rho2) / s) <= EQ_TOL
    return BoundCheck("r1-family", p.rho1, rhs, ">=", predicted,
                      {"t": t, "k": k, "rho2": p.rho2, "n": n})


def check_r1_optimal(g: Graph, pair: TopPair | None = None) -> BoundCheck:
    """The t = sqrt(n-1)/rho_1 member; equality predicted for the class G_n."""
    if g.n < 2:
        raise InvalidParameterError("needs n >= 2")
    p = pair or top_pair(g)
    n = g.n
    k = _min_positive(p.rho2_vector)
    disc = p.rho2**2 + 4 * (n - 1) * (2 * k * math.sqrt(n - 1) - 1)
    # a negative discriminant makes the quadratic positive everywhere
    rhs = (p.rho2 + math.sqrt(disc)) / 2 if disc >= 0 else p.rho2 / 2
    return BoundCheck("r1-optimal", p.rho1, rhs, ">=", p.rho2_rows_equal,
                      {"k": k, "rho2": p.rho2, "disc": disc, "n": n})


def check_r1_t1(g: Graph, pair: TopPair | None = None) -> BoundCheck:
    """2 rho_1 - rho_2 >= 2k(n-1); equality predicted only for K_2."""
    if g.n < 2:
        raise InvalidParameterError("needs n >= 2")
    p = pair or top_pair(g)
    k = _min_positive(p.rho2_vector)
    return BoundCheck("r1-t1", 2 * p.rho1 - p.rho2, 2 * k * (g.n - 1), ">=", g.n == 2,
                      {"k": k, "rho1": p.rho1, "rho2": p.rho2, "n": g.n})


def check_transmission_bound(g: Graph, pair: TopPair | None = None) -> BoundCheck:
    """rho_1 >= (Tr(v)-1 + sqrt((Tr(v)-1)^2 + 4(n-1)))/2 at a minimum-transmission vertex.

    The equality prediction is "g is pyramidal".
    """
    if g.n < 2:
        raise InvalidParameterError("needs n >= 2")
    d = distance_matrix(g)
    trans = d.sum(axis=1)
    v = int(np.argmin(trans))
    tr = int(trans[v])
    rho1 = pair.rho1 if pair else spectral_radius(d).radius
    rhs = (tr - 1 + math.sqrt((tr - 1) ** 2 + 4 * (g.n - 1))) / 2
    pyr, verts = is_pyramidal(g)
    return BoundCheck("transmission", rho1, rhs, ">=", pyr,
                      {"v": v, "Tr(v)": tr, "pyramidal_vertices": verts})


# ---------------------------------------------------------------------------
# rho_1 - rho_2 and rho_1 / rho_2

def check_diff_cn(n: int) -> BoundCheck:
    """rho_1(C_n) - rho_2(C_n) < floor(n^2/4)/(n-1); strict form fails at n = 3 (boundary)."""
    if n < 3:
        raise InvalidParameterError("cycle needs n >= 3")
    g = make_family("C", n)
    rho1 = spectral_radius(distance_matrix(g)).radius
    rho2, _ = rho2_by_deletion(g)
    q = n * n // 4
    return BoundCheck("diff-cn", rho1 - rho2, q / (n - 1), "<", None,
                      {"n": n, "rho1": rho1, "rho2": rho2, "floor_n2_4": q})


def check_diff_sn(n: int, budget: int = ENUM_BUDGET) -> BoundCheck:
    """Enumerated rho_1(S_n) - rho_2(S_n) against the closed form (an identity)."""
    if n < 3:
        raise InvalidParameterError("star difference needs n >= 3")
    spec = pareto_spectrum(make_family("S", n), budget)
    gap = spec.rho(1) - spec.rho(2)
    return BoundCheck("diff-sn", gap, star_gap(n), ">=", True,
                      {"n": n, "decreasing": star_gap(n + 1) < star_gap(n)})


def star_gap_decreasing(n_max: int = 50) -> bool:
    return all(star_gap(n + 1) < star_gap(n) for n in range(3, n_max))


def check_diff_rownorm(g: Graph, pair: TopPair | None = None) -> BoundCheck:
    """rho_1 - rho_2 < min_u sqrt(sum_v d_uv^2)."""
    if g.n < 2:
        raise InvalidParameterError("needs n >= 2")
    p = pair or top_pair(g)
    d = distance_matrix(g)
    norms = np.sqrt((d.astype(float) ** 2).sum(axis=1))
    u = int(np.argmin(norms))
    return BoundCheck("diff-rownorm", p.rho1 - p.rho2, float(norms[u]), "<", None, {"u": u})


def _vertex_equality(d: np.ndarray, p: TopPair, v: int) -> bool:
    denom = (p.rho1 - p.rho2) * (2 * p.rho1 - p.rho2)
    if denom <= 0:
        return False
    target = d[:, v] / math.sqrt(denom)
    others = [u for u in range(d.shape[0]) if u != v]
    return bool(np.all(np.abs(p.perron[others] - target[others]) <= EQ_TOL))


def check_ratio_vertex(g: Graph, v: int, pair: TopPair | None = None) -> list[BoundCheck]:
    """Per-vertex ratio and difference bounds at ``v``; empty when 1 - 2 x_v^2 <= 0."""
    p = pair or top_pair(g)
    d = distance_matrix(g)
    xv2 = float(p.perron[v] ** 2)
    if 1 - 2 * xv2 <= 0:
        return []
    eq = _vertex_equality(d, p, v)
    params = {"v": v, "x_v": math.sqrt(xv2)}
    return [
        BoundCheck("ratio-vertex", p.rho1 / p.rho2, (1 - xv2) / (1 - 2 * xv2), "<=", eq, params),
        BoundCheck("diff-vertex", p.rho1 - p.rho2, p.rho2 * xv2 / (1 - 2 * xv2), "<=", eq, params),
    ]


def check_ratio(g: Graph, pair: TopPair | None = None) -> list[BoundCheck]:
    """Four checks: per-vertex ratio and difference (at argmin x_v), ratk and diff-global."""
    if g.n < 3:
        raise OutOfRangeError("ratio bounds need n >= 3 (rho_2 must be positive)", size=g.n)
    p = pair or top_pair(g)
    n = g.n
    v = int(np.argmin(p.perron))
    complete = g.is_complete()
    checks = check_ratio_vertex(g, v, p)
    checks += [
        BoundCheck("ratk", p.rho1 / p.rho2, (n - 1) / (n - 2), "<=", complete, {"n": n}),
        BoundCheck("diff-global", p.rho1 - p.rho2, p.rho2 / (n - 2), "<=", complete, {"n": n}),
    ]
    return checks


SUITES = ("avg", "r1-t1", "r1-optimal", "r1-family", "transmission", "diff-rownorm",
          "ratio-vertex", "diff-vertex", "ratk", "diff-global")


def bound_suite(g: Graph, suites=SUITES, t_values=(0.5, 1.0, 2.0)) -> list[BoundCheck]:
    """Every per-graph bound in ``suites`` for ``g`` (skipping ones undefined at this order)."""
    from .spectral import avg_row_sum_bound

    suites = set(suites)
    out: list[BoundCheck] = []
    if "avg" in suites:
        out.append(avg_row_sum_bound(distance_matrix(g)))
    if g.n < 2:
        return out
    p = top_pair(g)
    if "r1-t1" in suites:
        out.append(check_r1_t1(g, p))
    if "r1-optimal" in suites:
        out.append(check_r1_optimal(g, p))
    if "r1-family" in suites:
        out.extend(check_r1_lower_family(g, t, p) for t in t_values)
    if "transmission" in suites:
        out.append(check_transmission_bound(g, p))
    if "diff-rownorm" in suites:
        out.append(check_diff_rownorm(g, p))
    if g.n >= 3 and suites & {"ratio-vertex", "diff-vertex", "ratk", "diff-global"}:
        out.extend(c for c in check_ratio(g, p) if c.name in suites)
    return out


# ---------------------------------------------------------------------------
# mu_5 / mu_6 classifiers

@dataclass(frozen=True)
class MuVerdict:
    k: int                 # 5 or 6
    value: float
    symbol: str
    rule: str
    evidence: dict = field(default_factory=dict)


Mu5Verdict = Mu6Verdict = MuVerdict


def _patterns(g: Graph, ids) -> dict:
    return {p.value: find_induced(g, p) for p in ids}


def classify_mu5(g: Graph) -> MuVerdict:
    """Fifth smallest Pareto value from clique number, diameter and induced patterns."""
    n = g.n
    if n < 4:
        raise OutOfRangeError(f"mu_5 needs n >= 4 (n={n})", size=n)
    if g.is_complete():
        if n == 4:
            raise OutOfRangeError("K_4 has only four Pareto values", size=4)
        return MuVerdict(5, 4.0, "4", "complete", {"omega": n, "diam": 1})
    omega = clique_number(g)
    diam = diameter(g)
    ev = {"omega": omega, "diam": diam}
    if omega >= 4 or diam >= 3:
        return MuVerdict(5, 3.0, "3", "omega>=4|diam>=3", ev)
    found = _patterns(g, [PatternId.C5, PatternId.S4_plus, PatternId.K4_minus_e])
    ev["induced"] = {k: v for k, v in found.items() if v is not None}
    if found["C5"] or found["S4+"]:
        sym = "(1+√33)/2"
        return MuVerdict(5, MU5_VALUES[sym], sym, "C5|S4+", ev)
    if found["K4-e"]:
        sym = "(3+√17)/2"
        return MuVerdict(5, MU5_VALUES[sym], sym, "K4-e", ev)
    return MuVerdict(5, 4.0, "4", "default", ev)


def _mu6(value_sym: str, rule: str, ev: dict) -> MuVerdict:
    return MuVerdict(6, MU6_VALUES[value_sym], value_sym, rule, ev)


def classify_mu6(g: Graph) -> MuVerdict:
    """Sixth smallest Pareto value, dispatched on the mu_5 case.

    Every complete graph K_n with n >= 6 has mu_6 = 5.  In the mu_5 = 3
    branch an induced P_5 forces the value 4 only when it is isometric
    (diam >= 4); the residual case is the radius of the 1-2-3 distance
    triangle that every diameter-3 graph contains.
    """
    n = g.n
    if n < 5:
        raise OutOfRangeError(f"mu_6 needs n >= 5 (n={n})", size=n)
    if g.is_complete():
        if n == 5:
            raise OutOfRangeError("K_5 has only five Pareto values", size=5)
        return _mu6("5", "complete", {"omega": n, "diam": 1})
    m5 = classify_mu5(g)
    ev = dict(m5.evidence)
    ev["mu5"] = m5.symbol
    if m5.symbol == "4":
        return _mu6("2+√7", "mu5=4", ev)
    if m5.symbol == "(3+√17)/2":
        return _mu6("4", "mu5=(3+√17)/2", ev)
    if m5.symbol == "3":
        found = _patterns(g, [PatternId.C5, PatternId.S4_plus, PatternId.K4_minus_e])
        ev["induced"] = {k: v for k, v in found.items() if v is not None}
        if found["C5"] or found["S4+"]:
            return _mu6("(1+√33)/2", "mu5=3:C5|S4+", ev)
        if found["K4-e"]:
            return _mu6("(3+√17)/2", "mu5=3:K4-e", ev)
        four = _patterns(g, [PatternId.K5, PatternId.C6, PatternId.C4, PatternId.S4])
        four = {k: v for k, v in four.items() if v is not None}
        ev["induced"].update(four)
        ev["P5_isometric"] = ev["diam"] >= 4
        if four or ev["P5_isometric"]:
            return _mu6("4", "mu5=3:K5|C6|C4|S4|diam>=4", ev)
        return _mu6("ρ(T123)", "mu5=3:triangle", ev)
    # mu_5 = (1+sqrt 33)/2
    if n == 5 and is_isomorphic(g, PATTERNS[PatternId.C5]):
        return _mu6("(3+√37)/2", "mu5=(1+√33)/2:C5", ev)
    if n == 5 and is_isomorphic(g, PATTERNS[PatternId.C3_star_C3]):
        return _mu6("γ", "mu5=(1+√33)/2:C3*C3", ev)
    if ev.get("induced", {}).get("K4-e"):
        return _mu6("(3+√17)/2", "mu5=(1+√33)/2:K4-e", ev)
    return _mu6("4", "mu5=(1+√33)/2:default", ev)
