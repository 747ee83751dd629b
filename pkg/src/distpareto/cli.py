"""Command-line entry point: ``distpareto {spectrum,classify,verify,scan,family,selftest}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 conjecture counterexample found.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import corpus_io as cio
from .errors import ParetoError, ResourceError
from .graph_core import Graph, coalesce, make_family
from .pareto import ENUM_BUDGET, pareto_spectrum
from .theorems import SUITES, bound_suite, classify_mu5, classify_mu6

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _set(mask_or_tuple) -> str:
    verts = mask_or_tuple
    return "{" + ",".join(str(v) for v in verts) + "}"


# ---------------------------------------------------------------------------
# input handling

def family_from_tokens(tokens: list[str]) -> Graph:
    """``K 4``, ``Kmn 2 3`` or ``coalesce C 3 C 3`` (identifying vertex 0 of each)."""
    if not tokens:
        raise UsageError("--family needs a name and a size")
    if tokens[0] == "coalesce":
        rest = tokens[1:]
        cut = _family_arity(rest)
        return coalesce(family_from_tokens(rest[:cut]), 0, family_from_tokens(rest[cut:]), 0)
    name, nums = tokens[0], tokens[1:]
    try:
        sizes = [int(t) for t in nums]
    except ValueError:
        raise UsageError(f"family sizes must be integers: {nums}") from None
    if len(sizes) not in (1, 2):
        raise UsageError(f"family {name} takes one or two sizes")
    try:
        return make_family(name, *sizes)
    except ParetoError as exc:
        raise UsageError(str(exc)) from None


def _family_arity(tokens: list[str]) -> int:
    if not tokens:
        raise UsageError("coalesce needs two family specs")
    return 3 if tokens[0] == "Kmn" else 2


def load_graphs(args) -> list[tuple[str, Graph, str | None]]:
    """``(graph6, graph, name)`` triples from --family or the input stream."""
    if args.family and args.input:
        raise UsageError("give either an input file or --family, not both")
    if args.family:
        g = family_from_tokens(args.family)
        return [(cio.emit_graph6(g), g, g.label)]
    if args.input in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    return [(r.line, r.graph, None) for r in cio.read_graph6(lines)]


def _pool_map(fn, items, workers):
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(it) for it in items]


def _label(g6, g, name):
    return name or cio.graph_name(g) or g6


# ---------------------------------------------------------------------------
# spectrum

def _parse_k(spec: str | None) -> list[tuple[str, int]]:
    if not spec:
        return []
    out = []
    for tok in spec.replace(",", " ").split():
        kind = tok[:3] if tok[:3] in ("rho",) else tok[:2]
        try:
            idx = int(tok[len(kind):])
        except ValueError:
            raise UsageError(f"bad --k entry {tok!r} (use mu4, rho1, ...)") from None
        if kind not in ("mu", "rho") or idx < 1:
            raise UsageError(f"bad --k entry {tok!r}")
        out.append((kind, idx))
    return out


def _spectrum_job(item):
    g6, g, name, budget = item
    try:
        return g6, name, pareto_spectrum(g, budget), None
    except ResourceError as exc:
        return g6, name, None, str(exc)


def cmd_spectrum(args) -> int:
    ks = _parse_k(args.k)
    graphs = load_graphs(args)
    results = _pool_map(_spectrum_job, [(g6, g, nm, args.max_n) for g6, g, nm in graphs], args.workers)
    records, lines, failed = [], [], False
    for (g6, g, _), (_, name, spec, err) in zip(graphs, results):
        label = _label(g6, g, name)
        if err:
            failed = True
            records.append({"kind": "error", "graph6": g6, "n": g.n, "name": label, "rule": err})
            lines.append(f"{label} {g6} n={g.n} error: {err}")
            continue
        wit = spec.witness_sets()
        rec = {"kind": "spectrum", "graph6": g6, "n": g.n, "name": label,
               "witnesses": [list(w) for w in wit], "values": list(spec.values)}
        lines.append(f"{label} {g6} n={g.n} |Pi|={len(spec)}")
        if ks:
            for kind, idx in ks:
                try:
                    pos = idx - 1 if kind == "mu" else len(spec) - idx
                    if not 0 <= pos < len(spec) or idx > len(spec):
                        raise IndexError
                    lines.append(f"{kind}{idx} {fmt(spec.values[pos])} {_set(wit[pos])}")
                    rec[f"{kind}{idx}"] = spec.values[pos]
                except IndexError:
                    failed = True
                    lines.append(f"{kind}{idx} out of range (|Pi|={len(spec)})")
        else:
            lines.append(" ".join(fmt(v) for v in spec.values))
            lines.extend(f"  {fmt(v)} {_set(w)}" for v, w in zip(spec.values, wit))
        records.append(rec)
    _emit(args, lines, records)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# classify

def _classify_job(item):
    g6, g, name, cross, budget = item
    out = []
    for k, fn in ((5, classify_mu5), (6, classify_mu6)):
        try:
            v = fn(g)
        except ParetoError as exc:
            out.append((k, None, str(exc), None))
            continue
        enum = None
        if cross:
            spec = pareto_spectrum(g, budget)
            enum = spec.mu(k) if len(spec) >= k else None
        out.append((k, v, None, enum))
    return out


def cmd_classify(args) -> int:
    graphs = load_graphs(args)
    results = _pool_map(_classify_job, [(g6, g, nm, args.cross_check, args.max_n) for g6, g, nm in graphs],
                        args.workers)
    records, lines, failed = [], [], False
    for (g6, g, name), res in zip(graphs, results):
        label = _label(g6, g, name)
        for k, v, note, enum in res:
            if v is None:
                lines.append(f"{label} {g6} mu{k}: skipped ({note})")
                records.append({"kind": f"mu{k}", "graph6": g6, "n": g.n, "name": label, "rule": f"skipped: {note}"})
                continue
            rec = cio.verdict_record(v, g6, g.n, label)
            text = f"{label} {g6} mu{k} = {fmt(v.value)} {v.symbol} [{v.rule}]"
            if args.cross_check:
                agree = enum is not None and abs(enum - v.value) <= 1e-9
                failed |= not agree
                rec["enumerated"] = enum
                rec["equality"] = agree
                text += f" enum={fmt(enum) if enum is not None else 'n/a'} {'agree' if agree else 'MISMATCH'}"
            lines.append(text)
            records.append(rec)
    _emit(args, lines, records)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# verify

def _verify_job(item):
    g6, g, name, suites = item
    return bound_suite(g, suites)


def cmd_verify(args) -> int:
    suites = SUITES if not args.suite or "all" in args.suite else tuple(args.suite)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise UsageError(f"unknown suite(s) {sorted(unknown)}; choose from {list(SUITES)}")
    graphs = load_graphs(args)
    results = _pool_map(_verify_job, [(g6, g, nm, suites) for g6, g, nm in graphs], args.workers)
    records, lines, violations = [], [], 0
    for (g6, g, name), checks in zip(graphs, results):
        label = _label(g6, g, name)
        for c in checks:
            rec = cio.bound_record(c, g6, g.n, label)
            records.append(rec)
            bad = c.status == "violated"
            violations += bad
            lines.append(
                f"{label} {g6} {c.name} {c.status} lhs={fmt(c.lhs)} rhs={fmt(c.rhs)} "
                f"slack={fmt(c.slack)} equality={c.equality} predicted={c.equality_predicted}"
                + (f" pyramidal={c.params['pyramidal_vertices']}" if c.name == "transmission" else "")
                + (" VIOLATION" if bad else "")
            )
    _emit(args, lines, records)
    return EXIT_FAIL if violations else EXIT_OK


# ---------------------------------------------------------------------------
# scan

def cmd_scan(args) -> int:
    if args.family:
        raise UsageError("scan reads a graph6 corpus, not --family")
    which = args.conjecture or list(cio.CONJECTURES)
    bad = [c for c in which if c not in cio.CONJECTURES]
    if bad:
        raise UsageError(f"unknown conjecture id(s) {bad}")
    ks = None
    if args.k:
        try:
            ks = [int(t) for t in args.k.replace(",", " ").split()]
        except ValueError:
            raise UsageError("--k takes integers for scan") from None
    if args.input in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    reports = cio.scan_conjectures(lines, which, ks, args.max_n, args.workers)
    text_lines = []
    for r in reports:
        text_lines.append(
            f"conjecture {r.conjecture}: scanned={r.graphs_scanned} skipped={r.skipped} "
            f"counterexamples={len(r.counterexamples)} inconclusive={len(r.inconclusive)}"
        )
        for e in r.extremal:
            if "ranking" in e:
                ranking = ", ".join(f"{x['name'] or x['graph6']}={fmt(x['value'])}" for x in e["ranking"])
                text_lines.append(f"  n={e['n']} {e['kind']}: {ranking} (bound {fmt(e['bound'])})")
            else:
                k = f" k={e['k']}" if "k" in e else ""
                text_lines.append(f"  n={e['n']}{k} {e['kind']}: {e['name'] or e['graph6']} = {fmt(e['value'])}")
        for note in r.notes:
            text_lines.append(f"  n={note['n']} {note['note']}")
    _emit(args, text_lines, reports)
    return EXIT_COUNTEREXAMPLE if any(not r.ok for r in reports) else EXIT_OK


# ---------------------------------------------------------------------------
# family / selftest

def cmd_family(args) -> int:
    g = family_from_tokens(args.tokens)
    print(cio.emit_graph6(g))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    failures = run_selftest(verbose=not args.quiet)
    for fid, msg in failures:
        print(f"FAIL {fid}: {msg}", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def _emit(args, text_lines, records):
    fmt_ = getattr(args, "format", "text")
    if fmt_ == "jsonl":
        sys.stdout.write(cio.write_report(records))
    elif fmt_ == "csv":
        sys.stdout.write(cio.csv_projection(records if isinstance(records, list) else list(records)))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distpareto", description="Distance Pareto spectra of connected graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, family=True):
        sp.add_argument("input", nargs="?", help="graph6 file ('-' or omitted: stdin)")
        if family:
            sp.add_argument("--family", nargs="+", metavar="TOKEN",
                            help="named graph instead of a file, e.g. 'K 4', 'Kmn 2 3', 'coalesce C 3 C 3'")
        sp.add_argument("--max-n", type=int, default=ENUM_BUDGET, help="enumeration budget (default 18)")
        sp.add_argument("--workers", type=int, default=1)
        fmt_group = sp.add_mutually_exclusive_group()
        fmt_group.add_argument("--format", choices=("text", "jsonl", "csv"), default="text")
        fmt_group.add_argument("--csv", dest="format", action="store_const", const="csv")

    sp = sub.add_parser("spectrum", help="print Pi(G) with witness subsets")
    common(sp)
    sp.add_argument("--k", help="comma list like mu4,rho1")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("classify", help="mu_5 / mu_6 verdicts")
    common(sp)
    sp.add_argument("--cross-check", action="store_true", help="compare against full enumeration")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run the bound suite")
    common(sp)
    sp.add_argument("--suite", nargs="+", help=f"'all' or any of: {', '.join(SUITES)}")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="scan a corpus for conjecture counterexamples")
    common(sp)
    sp.add_argument("--conjecture", type=int, nargs="+", help="ids 1..5 (default all)")
    sp.add_argument("--k", help="k values for conjectures 4 and 5")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("family", help="emit the graph6 token of a named graph")
    sp.add_argument("tokens", nargs="+")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("selftest", help="run the embedded invariant suite")
    sp.add_argument("--quiet", action="store_true")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"distpareto: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParetoError as exc:  # parse/domain errors in the input stream
        print(f"distpareto: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"distpareto: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
