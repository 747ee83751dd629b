"""Simple connected graphs stored as adjacency bitsets.

Everything here is small-graph machinery: named families, coalescence,
BFS distances, transmissions, exact clique numbers and induced-pattern
detection by permutation search.  A :class:`Graph` is immutable and is
guaranteed connected at construction time.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DomainError, InvalidParameterError, ResourceError

CLIQUE_BUDGET = 20


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _components(adj: Sequence[int]) -> int:
    n = len(adj)
    seen = 0
    count = 0
    for start in range(n):
        if seen >> start & 1:
            continue
        count += 1
        frontier = 1 << start
        seen |= frontier
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
    return count


@dataclass(frozen=True)
class Graph:
    """A finite, simple, undirected, connected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u ~ v``.  ``label`` is
    a free-form tag (``"C5"``, ``"S4+"``...) that does not take part in
    equality.
    """

    n: int
    adj: tuple
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        adj = tuple(int(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        if self.n < 1 or len(adj) != self.n:
            raise DomainError(f"graph needs n >= 1 vertices and one bitset per vertex (n={self.n})")
        full = (1 << self.n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise DomainError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in _bits(nb):
                if not adj[u] >> v & 1:
                    raise DomainError(f"adjacency not symmetric between {v} and {u}")
        comps = _components(adj)
        if comps != 1:
            raise DomainError(f"graph is disconnected ({comps} components)", components=comps)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: Optional[str] = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    @cached_property
    def distances(self) -> np.ndarray:
        d = np.zeros((self.n, self.n), dtype=np.int64)
        for s in range(self.n):
            d[s] = _bfs_layers(self.adj, s)
        d.setflags(write=False)
        return d

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"Graph(n={self.n}, m={self.num_edges}{tag})"


def _bfs_layers(adj: Sequence[int], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in _bits(adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


# ---------------------------------------------------------------------------
# families

_FAMILY_MIN = {"K": 1, "P": 1, "C": 3, "S": 2, "W": 4, "S+": 4, "K-e": 3, "Kmn": 1}


def make_family(name: str, n: int, m: Optional[int] = None) -> Graph:
    """Build a named graph family member with canonical vertex numbering.

    ``name`` is one of ``K``, ``P``, ``C``, ``S`` (star, center 0), ``W``
    (wheel, hub 0, rim 1..n-1), ``S+`` (star plus the leaf edge 1-2), ``K-e``
    (complete minus edge 0-1) or ``Kmn`` (complete bipartite K_{n,m}; parts
    ``0..n-1`` and ``n..n+m-1``).
    """
    if name not in _FAMILY_MIN:
        raise InvalidParameterError(f"unknown family {name!r}; expected one of {sorted(_FAMILY_MIN)}")
    low = _FAMILY_MIN[name]
    if n < low:
        raise InvalidParameterError(f"family {name} needs n >= {low}, got {n}")
    if name == "Kmn":
        if m is None or m < 1:
            raise InvalidParameterError("family Kmn needs two part sizes >= 1")
        edges = [(i, n + j) for i in range(n) for j in range(m)]
        return Graph.from_edges(n + m, edges, label=f"K{n},{m}")
    if name == "K":
        edges = list(combinations(range(n), 2))
    elif name == "P":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif name == "C":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif name == "S":
        edges = [(0, i) for i in range(1, n)]
    elif name == "W":
        rim = n - 1
        edges = [(0, i) for i in range(1, n)] + [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    elif name == "S+":
        edges = [(0, i) for i in range(1, n)] + [(1, 2)]
    else:  # K-e
        edges = [e for e in combinations(range(n), 2) if e != (0, 1)]
    return Graph.from_edges(n, edges, label=f"{name}{n}")


def coalesce(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Identify vertex ``u`` of ``g`` with vertex ``v`` of ``h``.

    The result keeps ``g``'s numbering; vertices of ``h`` other than ``v``
    follow in order as ``g.n, g.n + 1, ...``.
    """
    if not (0 <= u < g.n and 0 <= v < h.n):
        raise InvalidParameterError(f"coalescence vertices out of range: u={u}, v={v}")
    remap = {}
    nxt = g.n
    for w in range(h.n):
        if w == v:
            remap[w] = u
        else:
            remap[w] = nxt
            nxt += 1
    edges = g.edges() + [(remap[a], remap[b]) for a, b in h.edges()]
    label = f"{g.label}*{h.label}" if g.label and h.label else None
    return Graph.from_edges(g.n + h.n - 1, edges, label=label)


# ---------------------------------------------------------------------------
# metric invariants

def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances as a read-only ``int64`` array."""
    return g.distances


def diameter(g: Graph) -> int:
    return int(g.distances.max())


def transmission(g: Graph, v: int) -> int:
    return int(g.distances[v].sum())


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def clique_number(g: Graph, budget: int = CLIQUE_BUDGET) -> int:
    """Exact clique number by branch and bound (greedy-colouring bound)."""
    if g.n > budget:
        raise ResourceError(f"clique_number on n={g.n} exceeds budget {budget}", required=g.n, budget=budget)
    adj = g.adj
    best = 1

    def colour_bound(cand: int) -> int:
        # number of colour classes in a greedy colouring bounds the clique size
        colours = 0
        rest = cand
        while rest:
            colours += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                rest &= ~(1 << v)
                avail &= ~(1 << v) & ~adj[v]
        return colours

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, (1 << g.n) - 1)
    return best


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in _bits(g.adj[v]):
            if colour[u] < 0:
                colour[u] = 1 - colour[v]
                queue.append(u)
            elif colour[u] == colour[v]:
                return False
    return True


def is_unicyclic(g: Graph) -> bool:
    return g.num_edges == g.n


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1


def is_pyramidal(g: Graph) -> tuple[bool, list[int]]:
    """Return whether ``g`` has a pyramidal vertex, and the list of them.

    A vertex is pyramidal when it is adjacent to every other vertex and its
    deletion leaves a connected regular graph.
    """
    if g.n < 2:
        raise InvalidParameterError("pyramidal vertices need n >= 2")
    out = []
    full = (1 << g.n) - 1
    for v in range(g.n):
        if g.adj[v] != full & ~(1 << v):
            continue
        keep = [u for u in range(g.n) if u != v]
        sub = _induced_adj(g.adj, keep)
        degs = {bin(a).count("1") for a in sub}
        if len(degs) == 1 and _components(sub) == 1:
            out.append(v)
    return bool(out), out


def _induced_adj(adj: Sequence[int], verts: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(verts)}
    sub = []
    for v in verts:
        row = 0
        for u in _bits(adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        sub.append(row)
    return sub


def induced_subgraph(g: Graph, verts: Sequence[int]) -> Graph:
    """Induced subgraph on ``verts`` (relabelled in the given order); must be connected."""
    return Graph(len(verts), tuple(_induced_adj(g.adj, verts)))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


# ---------------------------------------------------------------------------
# isomorphism (small graphs only)

def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """Map ``phi`` with ``g.adj`` preserved onto ``h``, or ``None``.

    Plain backtracking with degree filtering; meant for n <= 10 or so.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return None
    order = sorted(range(g.n), key=lambda v: -dg[v])
    phi = [-1] * g.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
        phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# ---------------------------------------------------------------------------
# induced patterns

class PatternId(enum.Enum):
    K4 = "K4"
    K4_minus_e = "K4-e"
    P4 = "P4"
    C4 = "C4"
    S4 = "S4"
    S4_plus = "S4+"
    C5 = "C5"
    K5 = "K5"
    C6 = "C6"
    P5 = "P5"
    C3_star_C3 = "C3*C3"


# hard-coded so patterns do not depend on make_family numbering
_PATTERN_EDGES = {
    PatternId.K4: (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    PatternId.K4_minus_e: (4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    PatternId.P4: (4, [(0, 1), (1, 2), (2, 3)]),
    PatternId.C4: (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    PatternId.S4: (4, [(0, 1), (0, 2), (0, 3)]),
    PatternId.S4_plus: (4, [(0, 1), (0, 2), (0, 3), (1, 2)]),
    PatternId.C5: (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    PatternId.K5: (5, list(combinations(range(5), 2))),
    PatternId.C6: (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]),
    PatternId.P5: (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    PatternId.C3_star_C3: (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
}

PATTERNS = {p: Graph.from_edges(n, e, label=p.value) for p, (n, e) in _PATTERN_EDGES.items()}


def find_induced(g: Graph, p: PatternId) -> Optional[tuple[int, ...]]:
    """First vertex subset (lexicographic) inducing a copy of pattern ``p``, else ``None``."""
    pat = PATTERNS[p]
    k = pat.n
    if k > g.n:
        return None
    m = pat.num_edges
    pat_edges = pat.edges()
    pat_degs = sorted(pat.degrees())
    for subset in combinations(range(g.n), k):
        sub = _induced_adj(g.adj, subset)
        if sum(bin(a).count("1") for a in sub) != 2 * m:
            continue
        if sorted(bin(a).count("1") for a in sub) != pat_degs:
            continue
        for perm in permutations(range(k)):
            if all(sub[perm[a]] >> perm[b] & 1 for a, b in pat_edges):
                return subset
    return None


def has_induced(g: Graph, p: PatternId) -> bool:
    return find_induced(g, p) is not None
