import pathlib
import random

import numpy as np
import pytest
from hypothesis import strategies as st

from distpareto import Graph, pareto_spectrum, read_graph6

DATA = pathlib.Path(__file__).parent / "data"
CORPUS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def corpus_lines(n):
    return (DATA / f"connected_n{n}.g6").read_text().splitlines()


def load_corpus(max_n=7, min_n=1):
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(read_graph6(corpus_lines(n)))
    return out


@pytest.fixture(scope="session")
def corpus():
    """Every connected graph on at most seven vertices, as Graph6Records."""
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_spectra(corpus):
    return {r.line: pareto_spectrum(r.graph) for r in corpus}


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        edges |= set(extra)
    return Graph.from_edges(n, edges)


def random_connected(n, p, rng):
    while True:
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        seen, stack = 1, [0]
        while stack:
            u = stack.pop()
            for v in range(n):
                if adj[u] >> v & 1 and not seen >> v & 1:
                    seen |= 1 << v
                    stack.append(v)
        if seen == (1 << n) - 1:
            return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240607)


def brute_spectrum(d, tol=1e-9):
    """Independent oracle: numpy eigvalsh on every principal submatrix."""
    d = np.asarray(d, dtype=float)
    n = d.shape[0]
    vals = []
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        vals.append(float(np.linalg.eigvalsh(d[np.ix_(idx, idx)])[-1]))
    vals.sort()
    out = []
    for v in vals:
        if not out or v - out[-1] > tol:
            out.append(v)
    return out


# --- acceptance summary: one PASS/FAIL line per criterion -------------------------

_ACCEPTANCE = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE.setdefault(crit, []).append((name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        results = _ACCEPTANCE[crit]
        failed = [name for name, ok in results if not ok]
        if failed:
            tr.write_line(f"FAIL criterion {crit}: {len(failed)}/{len(results)} clauses failed ({', '.join(failed)})")
        else:
            tr.write_line(f"PASS criterion {crit}: {len(results)} clauses")
