"""Embedded invariant checks run by ``distpareto selftest`` (no external files)."""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .corpus_io import emit_graph6, parse_graph6
from .graph_core import coalesce, distance_matrix, make_family
from .pareto import certificate_for, pareto_spectrum, verify_pareto
from .spectral import all_eigenvalues, spectral_radius
from .theorems import GAMMA, GAMMA_MATRIX, gamma_polynomial, star_spectrum_closed_form


def _oracle_agreement():
    for g in (make_family("P", 5), make_family("C", 6), make_family("W", 6), make_family("S+", 5)):
        d = distance_matrix(g)
        for k in range(1, g.n + 1):
            for s in combinations(range(g.n), k):
                sub = d[np.ix_(s, s)]
                r = spectral_radius(sub)
                if abs(r.radius - all_eigenvalues(sub)[0]) > 1e-10:
                    return f"{g.label} subset {s}: power {r.radius} vs jacobi {all_eigenvalues(sub)[0]}"
                if r.residual > 1e-12:
                    return f"{g.label} subset {s}: residual {r.residual}"
    return None


def _complete_spectra():
    for n in range(1, 8):
        vals = pareto_spectrum(make_family("K", n)).values
        if len(vals) != n or any(abs(v - i) > 1e-9 for i, v in enumerate(vals)):
            return f"Pi(K{n}) = {vals}"
    return None


def _star_closed_form():
    for n in range(3, 8):
        got = pareto_spectrum(make_family("S", n)).values
        want = star_spectrum_closed_form(n)
        if len(got) != 2 * (n - 1) or not np.allclose(got, want, atol=1e-9, rtol=0):
            return f"S{n}: {got} vs {want}"
    return None


def _gamma():
    if abs(gamma_polynomial(GAMMA)) > 1e-10:
        return f"|p(gamma)| = {abs(gamma_polynomial(GAMMA))}"
    if abs(spectral_radius(GAMMA_MATRIX).radius - GAMMA) > 1e-9:
        return "gamma differs from the 4x4 witness matrix radius"
    c3 = make_family("C", 3)
    if abs(pareto_spectrum(coalesce(c3, 0, c3, 0)).mu(6) - GAMMA) > 1e-9:
        return "mu_6(C3*C3) != gamma"
    return None


def _round_trip():
    for name, n in (("K", 6), ("P", 7), ("C", 9), ("W", 8), ("S+", 5), ("K-e", 5)):
        g = make_family(name, n)
        if parse_graph6(emit_graph6(g)) != g:
            return f"graph6 round trip failed for {name}{n}"
    if emit_graph6(make_family("K", 2)) != "A_" or emit_graph6(make_family("K", 3)) != "Bw":
        return "graph6 encodings of K2/K3"
    return None


def _certificates():
    g = make_family("S+", 5)
    d = distance_matrix(g)
    for mask in range(1, 1 << g.n):
        cert = certificate_for(d, mask)
        if not verify_pareto(d, cert.lam, cert.x):
            return f"certificate for subset {mask:#x} does not verify"
    return None


def _small_values():
    for g in (make_family("P", 6), make_family("C", 5), make_family("Kmn", 2, 3), make_family("W", 6)):
        vals = pareto_spectrum(g).values
        if not np.allclose(vals[:4], [0, 1, 2, 1 + math.sqrt(3)], atol=1e-9, rtol=0):
            return f"{g.label}: smallest four {vals[:4]}"
    return None


CHECKS = {
    "spectral-oracle": _oracle_agreement,
    "pi-complete": _complete_spectra,
    "star-closed-form": _star_closed_form,
    "gamma": _gamma,
    "graph6-round-trip": _round_trip,
    "certificates": _certificates,
    "smallest-values": _small_values,
}


def run_selftest(verbose: bool = True) -> list[tuple[str, str]]:
    failures = []
    for fid, fn in CHECKS.items():
        msg = fn()
        if verbose:
            print(f"{'ok  ' if msg is None else 'FAIL'} {fid}")
        if msg is not None:
            failures.append((fid, msg))
    return failures
