"""graph6 ingestion/emission, conjecture scans and line-oriented reports.

Only the single-byte size form of graph6 is supported (n <= 62).  Reports
are JSON Lines with a fixed field order; floats are rounded to 12
significant digits so output is byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .bounds import BoundCheck
from .errors import DomainError, InvalidParameterError, MalformedInputError, ParetoError, ResourceError
from .graph_core import (
    Graph,
    coalesce,
    find_isomorphism,
    is_bipartite,
    is_unicyclic,
    make_family,
)
from .pareto import ENUM_BUDGET, ParetoSpectrum, pareto_spectrum
from .theorems import MuVerdict, rho2_snplus_closed_form, star_gap

HEADER = ">>graph6<<"
GUARD = 1e-7


# ---------------------------------------------------------------------------
# graph6

def parse_graph6(line: str, ordinal: Optional[int] = None) -> Graph:
    tok = line.strip()
    if tok.startswith(HEADER):
        tok = tok[len(HEADER):]
    where = f" (line {ordinal})" if ordinal is not None else ""
    if not tok:
        raise MalformedInputError(f"empty graph6 token{where}", ordinal)
    codes = [ord(c) for c in tok]
    if any(c < 63 or c > 126 for c in codes):
        raise MalformedInputError(f"byte outside [63, 126] in {tok!r}{where}", ordinal)
    n = codes[0] - 63
    if n > 62:
        raise MalformedInputError(f"multi-byte graph6 sizes are unsupported{where}", ordinal)
    nbits = n * (n - 1) // 2
    if len(codes) - 1 != (nbits + 5) // 6:
        raise MalformedInputError(
            f"graph6 token {tok!r} has {len(codes) - 1} data bytes, expected {(nbits + 5) // 6}{where}",
            ordinal,
        )
    bits = []
    for c in codes[1:]:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    try:
        return Graph(n, tuple(adj))
    except DomainError as exc:
        raise DomainError(f"{exc}{where}", components=exc.components, ordinal=ordinal) from None


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ParetoError("graph6 emission limited to n <= 62")
    bits = [1 if g.adj[i] >> j & 1 else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(chr(v + 63))
    return "".join(out)


@dataclass(frozen=True)
class Graph6Record:
    line: str
    graph: Graph
    ordinal: int


def read_graph6(lines: Iterable[str]) -> Iterator[Graph6Record]:
    """Decode a stream, skipping blank lines; ordinals count from 1 over all lines."""
    for ordinal, raw in enumerate(lines, start=1):
        tok = raw.strip()
        if not tok:
            continue
        if tok.startswith(HEADER):
            tok = tok[len(HEADER):]
            if not tok:
                continue
        yield Graph6Record(tok, parse_graph6(tok, ordinal), ordinal)


# ---------------------------------------------------------------------------
# naming

def _named_candidates(n: int) -> list[Graph]:
    out = []
    for name, low in (("K", 1), ("P", 1), ("C", 3), ("S", 2), ("W", 5), ("S+", 4), ("K-e", 3)):
        if n >= low:
            out.append(make_family(name, n))
    for a in range(1, n // 2 + 1):
        if n - a >= 1:
            out.append(make_family("Kmn", a, n - a))
    if n == 5:
        c3 = make_family("C", 3)
        out.append(coalesce(c3, 0, c3, 0))
    return out


def graph_name(g: Graph) -> Optional[str]:
    """Family label when ``g`` is isomorphic to a named graph of its order."""
    if g.n > 10:
        return g.label
    for cand in _named_candidates(g.n):
        if find_isomorphism(g, cand) is not None:
            return cand.label
    return None


# ---------------------------------------------------------------------------
# conjecture scans

CONJECTURES = (1, 2, 3, 4, 5)


@dataclass
class ScanReport:
    conjecture: int
    graphs_scanned: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    extremal: list = field(default_factory=list)   # dicts per order (and k)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


@dataclass(frozen=True)
class _Eval:
    ordinal: int
    g6: str
    n: int
    unicyclic: bool
    bipartite: bool
    values: Optional[tuple]  # ascending Pareto values, None when over budget


def _evaluate(args) -> _Eval:
    rec_line, ordinal, budget = args
    g = parse_graph6(rec_line, ordinal)
    try:
        vals = pareto_spectrum(g, budget).values
    except ResourceError:
        vals = None
    return _Eval(ordinal, rec_line, g.n, is_unicyclic(g), is_bipartite(g), vals)


def _top_sum(vals, k):
    return float(sum(vals[-k:]))


def _reference_spectrum(name, n, m=None, budget=ENUM_BUDGET) -> ParetoSpectrum:
    return pareto_spectrum(make_family(name, n, m), budget)


def _rank(items):
    """Sort (value, ordinal, g6) ascending by value then stream order."""
    return sorted(items, key=lambda t: (t[0], t[1]))


def _ext(best):
    val, ordinal, g6 = best
    return {"value": val, "graph6": g6, "ordinal": ordinal, "name": _label(g6)}


def _label(g6: str) -> Optional[str]:
    return graph_name(parse_graph6(g6))


def _is_family(g6: str, name: str, n: int, m=None) -> bool:
    return find_isomorphism(parse_graph6(g6), make_family(name, n, m)) is not None


def scan_conjectures(
    lines: Iterable[str],
    which: Iterable[int] = CONJECTURES,
    k_values: Optional[Iterable[int]] = None,
    budget: int = ENUM_BUDGET,
    workers: int = 1,
) -> list[ScanReport]:
    """Evaluate conjectures 1-5 over a graph6 stream.

    Graphs are grouped by order; counterexamples must beat the conjectured
    inequality by more than ``GUARD`` (1e-7), near-ties inside the band are
    listed as inconclusive.  Results depend only on stream order.
    """
    which = sorted(set(which))
    bad = [c for c in which if c not in CONJECTURES]
    if bad:
        raise InvalidParameterError(f"unknown conjecture id(s): {bad}")
    jobs = [(r.line, r.ordinal, budget) for r in read_graph6(lines)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            evals = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        evals = [_evaluate(j) for j in jobs]

    by_order: dict[int, list[_Eval]] = {}
    skipped = 0
    for e in evals:
        if e.values is None:
            skipped += 1
            continue
        by_order.setdefault(e.n, []).append(e)
    kset = sorted(set(k_values)) if k_values else None

    reports = []
    for c in which:
        rep = ScanReport(c, graphs_scanned=sum(len(v) for v in by_order.values()), skipped=skipped)
        for n in sorted(by_order):
            group = by_order[n]
            {1: _conj1, 2: _conj2, 3: _conj3, 4: _conj4, 5: _conj5}[c](rep, n, group, kset, budget)
        reports.append(rep)
    return reports


def _gap(vals) -> float:
    return vals[-1] - vals[-2]


def _conj1(rep, n, group, kset, budget):
    """rho_2 >= rho_2(S_n^+) over unicyclic graphs of order n >= 7, equality only at S_n^+."""
    uni = [e for e in group if e.unicyclic]
    if not uni:
        return
    if n < 7:
        rep.notes.append({"n": n, "note": "order skipped (conjecture needs n >= 7)", "graphs": len(uni)})
        return
    bound = rho2_snplus_closed_form(n)
    items = _rank((e.values[-2], e.ordinal, e.g6) for e in uni)
    for val, ordinal, g6 in items:
        diff = val - bound
        if diff < -GUARD:
            rep.counterexamples.append({"n": n, "graph6": g6, "ordinal": ordinal, "rho2": val, "bound": bound})
        elif abs(diff) <= GUARD and not _is_family(g6, "S+", n):
            rep.inconclusive.append({"n": n, "graph6": g6, "ordinal": ordinal, "rho2": val, "bound": bound})
    ranked = [_ext(it) for it in items[:2]]
    rep.extremal.append({"n": n, "kind": "min rho2", "bound": bound, "ranking": ranked})


def _conj2(rep, n, group, kset, budget):
    """rho_1 - rho_2 <= that of C_n, equality only at C_n."""
    if n < 3:
        return
    ref = _reference_spectrum("C", n, budget=budget)
    target = _gap(ref.values)
    items = _rank((_gap(e.values), e.ordinal, e.g6) for e in group)
    for val, ordinal, g6 in items:
        diff = val - target
        if diff > GUARD:
            rep.counterexamples.append({"n": n, "graph6": g6, "ordinal": ordinal, "gap": val, "bound": target})
        elif abs(diff) <= GUARD and not _is_family(g6, "C", n):
            rep.inconclusive.append({"n": n, "graph6": g6, "ordinal": ordinal, "gap": val, "bound": target})
    best = max(items, key=lambda t: (t[0], -t[1]))
    rep.extremal.append({"n": n, "kind": "max gap", "bound": target, **_ext(best)})


def _conj3(rep, n, group, kset, budget):
    """rho_1 - rho_2 >= sqrt(n^2-3n+3) - n + 2, equality only at S_n."""
    if n < 2:
        return
    target = star_gap(n)
    items = _rank((_gap(e.values), e.ordinal, e.g6) for e in group)
    equal = []
    for val, ordinal, g6 in items:
        diff = val - target
        if diff < -GUARD:
            rep.counterexamples.append({"n": n, "graph6": g6, "ordinal": ordinal, "gap": val, "bound": target})
        elif abs(diff) <= GUARD:
            equal.append(g6)
            if not _is_family(g6, "S", n):
                rep.inconclusive.append({"n": n, "graph6": g6, "ordinal": ordinal, "gap": val, "bound": target})
    best = items[0]
    rep.extremal.append({"n": n, "kind": "min gap", "bound": target, "equality_count": len(equal),
                         **_ext(best)})


def _k_range(group, kset):
    kmax = min(len(e.values) for e in group)
    ks = range(1, kmax + 1) if kset is None else [k for k in kset if k <= kmax]
    return kmax, list(ks)


def _conj4(rep, n, group, kset, budget):
    """Sum of the k largest values: minimum at S_n, maximum at P_n."""
    if n < 2:
        return
    kmax, ks = _k_range(group, kset)
    s_ref = _reference_spectrum("S", n, budget=budget).values
    p_ref = _reference_spectrum("P", n, budget=budget).values
    for k in ks:
        lo, hi = _top_sum(s_ref, k), _top_sum(p_ref, k)
        items = _rank((_top_sum(e.values, k), e.ordinal, e.g6) for e in group)
        for val, ordinal, g6 in items:
            if val < lo - GUARD:
                rep.counterexamples.append({"n": n, "k": k, "graph6": g6, "ordinal": ordinal, "sum": val,
                                            "bound": lo, "side": "min"})
            elif val > hi + GUARD:
                rep.counterexamples.append({"n": n, "k": k, "graph6": g6, "ordinal": ordinal, "sum": val,
                                            "bound": hi, "side": "max"})
        best_max = max(items, key=lambda t: (t[0], -t[1]))
        rep.extremal.append({"n": n, "k": k, "kind": "min sum", "bound": lo, **_ext(items[0])})
        rep.extremal.append({"n": n, "k": k, "kind": "max sum", "bound": hi, **_ext(best_max)})
    if kset is not None and any(k > kmax for k in kset):
        rep.notes.append({"n": n, "note": f"k > {kmax} skipped (fewer Pareto values in this order)"})


def _conj5(rep, n, group, kset, budget):
    """Among bipartite graphs the k-largest sum is minimum at K_{floor(n/2), ceil(n/2)}."""
    bip = [e for e in group if e.bipartite]
    if n < 2 or not bip:
        return
    kmax, ks = _k_range(bip, kset)
    ref = _reference_spectrum("Kmn", n // 2, n - n // 2, budget=budget).values
    for k in ks:
        lo = _top_sum(ref, k)
        items = _rank((_top_sum(e.values, k), e.ordinal, e.g6) for e in bip)
        for val, ordinal, g6 in items:
            diff = val - lo
            if diff < -GUARD:
                rep.counterexamples.append({"n": n, "k": k, "graph6": g6, "ordinal": ordinal, "sum": val, "bound": lo})
            elif abs(diff) <= GUARD and not _is_family(g6, "Kmn", n // 2, n - n // 2):
                rep.inconclusive.append({"n": n, "k": k, "graph6": g6, "ordinal": ordinal, "sum": val, "bound": lo})
        rep.extremal.append({"n": n, "k": k, "kind": "min sum", "bound": lo, **_ext(items[0])})


# ---------------------------------------------------------------------------
# reports

FIELDS = ("kind", "graph6", "n", "name", "lhs", "rhs", "slack", "equality", "rule", "witnesses")
CSV_FIELDS = ("kind", "name", "n", "graph6", "value", "slack", "equality")


def _num(x):
    if x is None:
        return None
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    x = float(x)
    if not math.isfinite(x):
        return repr(x)
    return float(f"{x:.12g}") + 0.0


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if hasattr(obj, "item"):  # numpy scalar
        obj = obj.item()
    return _num(obj) if isinstance(obj, (int, float)) else str(obj)


def bound_record(check: BoundCheck, graph6: Optional[str] = None, n=None, name=None) -> dict:
    return {
        "kind": "bound", "graph6": graph6, "n": n, "name": check.name,
        "lhs": check.lhs, "rhs": check.rhs, "slack": check.slack, "equality": check.equality,
        "rule": check.status, "witnesses": None,
        "relation": check.relation, "equality_predicted": check.equality_predicted,
        "graph": name, "params": check.params,
    }


def verdict_record(v: MuVerdict, graph6: Optional[str] = None, n=None, name=None) -> dict:
    return {
        "kind": f"mu{v.k}", "graph6": graph6, "n": n, "name": name,
        "lhs": v.value, "rhs": None, "slack": None, "equality": None,
        "rule": v.rule, "witnesses": v.evidence.get("induced"),
        "symbol": v.symbol, "evidence": {k: val for k, val in v.evidence.items() if k != "induced"},
    }


def scan_records(rep: ScanReport) -> list[dict]:
    out = [{
        "kind": "scan", "graph6": None, "n": None, "name": f"conjecture{rep.conjecture}",
        "lhs": None, "rhs": None, "slack": None, "equality": None,
        "rule": "ok" if rep.ok else "counterexample", "witnesses": None,
        "graphs_scanned": rep.graphs_scanned, "skipped": rep.skipped,
        "counterexamples": len(rep.counterexamples), "inconclusive": len(rep.inconclusive),
    }]
    for kind, rows in (("counterexample", rep.counterexamples), ("inconclusive", rep.inconclusive),
                       ("extremal", rep.extremal), ("note", rep.notes)):
        for row in rows:
            rec = {f: None for f in FIELDS}
            rec.update(kind=kind, name=f"conjecture{rep.conjecture}", graph6=row.get("graph6"), n=row.get("n"))
            rename = {"kind": "extremum", "name": "graph"}
            rec.update({rename.get(k, k): v for k, v in row.items() if k not in ("graph6", "n")})
            out.append(rec)
    return out


def _as_records(items) -> list[dict]:
    recs = []
    for it in items:
        if isinstance(it, dict):
            recs.append(it)
        elif isinstance(it, BoundCheck):
            recs.append(bound_record(it))
        elif isinstance(it, MuVerdict):
            recs.append(verdict_record(it))
        elif isinstance(it, ScanReport):
            recs.extend(scan_records(it))
        else:
            raise TypeError(f"cannot serialise {type(it).__name__}")
    return recs


def write_report(*groups, stream=None) -> str:
    """Serialise reports, bound checks, verdicts (or raw record dicts) as JSON Lines.

    Standard fields come first in a fixed order; extra fields follow in
    insertion order.  Returns the text and also writes it to ``stream`` if given.
    """
    lines = []
    for group in groups:
        items = group if isinstance(group, (list, tuple)) else [group]
        for rec in _as_records(items):
            ordered = {f: rec.get(f) for f in FIELDS}
            ordered.update({k: v for k, v in rec.items() if k not in FIELDS})
            lines.append(json.dumps(_clean(ordered), ensure_ascii=False))
    text = "".join(line + "\n" for line in lines)
    if stream is not None:
        stream.write(text)
    return text


def csv_projection(records: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for rec in _as_records(list(records)):
        value = rec.get("lhs")
        if value is None:
            value = rec.get("value", rec.get("sum", rec.get("gap", rec.get("rho2"))))
        row = {**rec, "value": value}
        w.writerow(["" if row.get(f) is None else _clean(row.get(f)) for f in CSV_FIELDS])
    return buf.getvalue()
