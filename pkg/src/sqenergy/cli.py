"""Command-line front end.

Exit codes: 0 success with zero violations, 1 theorem violation or
cross-check failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .coulson import QuadratureParams
from .errors import SqEnergyError
from .graphs import parse_edge_list, parse_graph6
from .verify import (
    analyze,
    exhaustive_campaign,
    random_campaign,
    report_csv,
    sweep_cycles,
)


def _build_parser():
    p = argparse.ArgumentParser(
        prog="sqenergy",
        description="Square energies of unicyclic graphs: dual-pipeline "
                    "computation and sign-trichotomy verification.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, quadrature=True):
        sp.add_argument("--output", choices=("json", "csv", "table"), default="table")
        sp.add_argument("--out", default=None, help="write reports here instead of stdout")
        if quadrature:
            sp.add_argument("--rel-tol", type=float, default=1e-9)
            sp.add_argument("--abs-tol", type=float, default=1e-12)

    sp = sub.add_parser("analyze", help="analyze a single graph")
    sp.add_argument("--in", dest="in_path", required=True,
                    help="input file, or '-' for stdin")
    sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    common(sp)

    sp = sub.add_parser("cycles", help="odd-cycle closed-form sweep")
    sp.add_argument("--k-max", type=int, default=21)
    common(sp)

    sp = sub.add_parser("exhaustive", help="all labeled unicyclic graphs up to n-max")
    sp.add_argument("--n-max", type=int, default=7)
    sp.add_argument("--workers", type=int, default=0, help="0 = auto")
    common(sp)

    sp = sub.add_parser("random", help="randomized campaign")
    sp.add_argument("--n-min", type=int, default=10)
    sp.add_argument("--n-max", type=int, default=30)
    sp.add_argument("--k", default="odd", help="cycle length: odd, any, or a fixed integer")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=0, help="0 = auto")
    common(sp)

    sp = sub.add_parser("selftest", help="packaging smoke test (< 5 s)")
    return p


def _report_table(r) -> str:
    lines = [
        f"graph {r.graph_id}  n={r.n}  k={r.k}  (k mod 4 = {r.residue})",
        f"  s+   = {r.s_plus:.6f}",
        f"  s-   = {r.s_minus:.6f}",
        f"  delta(eigen)    = {r.delta_eigen:.7f}",
        f"  delta(integral) = {r.delta_integral:.7f}",
        f"  poly identity ok: {r.poly_identity_ok}   "
        f"theta agreement: {r.theta_agreement}",
        f"  verdict: {r.verdict}",
    ]
    return "\n".join(lines)


def _summary_table(s) -> str:
    lines = [
        f"graphs tested      : {s.graphs_tested}",
        f"violations         : {s.violations}",
        f"crosscheck failures: {s.crosscheck_failures}",
        f"worst theta dev    : {s.worst_theta_agreement:.3e}",
        f"worst delta dev    : {s.worst_delta_crosscheck:.3e}",
        f"worst 2n-sum gap   : {s.worst_sum_identity_gap:.3e}",
        f"min |delta| (odd k): {s.min_abs_delta_eigen:.3e}",
        f"wall time          : {s.wall_time:.2f} s",
    ]
    return "\n".join(lines)


def _emit_campaign(summary, reports, output, stream):
    if output == "json":
        for r in reports:
            print(r.to_json(), file=stream)
        print(summary.to_json(), file=stream)
    elif output == "csv":
        stream.write(report_csv(reports))
    else:
        print(_summary_table(summary), file=stream)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _selftest(stream) -> int:
    import math
    from .graphs import cycle_graph, parse_edge_list

    failures = 0

    def check(name, cond):
        nonlocal failures
        print(f"{'PASS' if cond else 'FAIL'}  {name}", file=stream)
        if not cond:
            failures += 1

    r3 = analyze(cycle_graph(3))
    check("C3 verdict CASE_3MOD4_OK", r3.verdict == "CASE_3MOD4_OK")
    check("C3 s+ = 4, s- = 2", abs(r3.s_plus - 4) < 1e-9 and abs(r3.s_minus - 2) < 1e-9)
    r5 = analyze(cycle_graph(5))
    check("C5 verdict CASE_1MOD4_OK", r5.verdict == "CASE_1MOD4_OK")
    check("C5 delta = -2(sec(pi/5)-1)",
          abs(r5.delta_eigen + 2 * (1 / math.cos(math.pi / 5) - 1)) < 1e-9)
    paw = parse_edge_list("n 4\n0 1\n1 2\n2 0\n2 3")
    rp = analyze(paw)
    check("paw verdict CASE_3MOD4_OK", rp.verdict == "CASE_3MOD4_OK")
    check("paw poly identity", rp.poly_identity_ok is True)
    s = sweep_cycles(21)
    check("cycle sweep k<=21 clean", s.ok)
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out_stream = sys.stdout
    close_stream = False
    try:
        if getattr(args, "out", None):
            out_stream = open(args.out, "w", encoding="utf-8")
            close_stream = True

        if args.command == "selftest":
            return _selftest(sys.stdout)

        qp = QuadratureParams(rel_tol=args.rel_tol, abs_tol=args.abs_tol) \
            if hasattr(args, "rel_tol") else None

        if args.command == "analyze":
            text = _read_input(args.in_path)
            g = parse_edge_list(text) if args.format == "edgelist" else parse_graph6(text)
            r = analyze(g, qp)
            if args.output == "json":
                print(r.to_json(), file=out_stream)
            elif args.output == "csv":
                out_stream.write(report_csv([r]))
            else:
                print(_report_table(r), file=out_stream)
            return 0 if (r.verdict != "VIOLATION" and r.crosscheck_ok) else 1

        reports = []
        sink = reports.append if args.output in ("json", "csv") else None
        if args.command == "cycles":
            summary = sweep_cycles(args.k_max, qp, sink=sink)
        elif args.command == "exhaustive":
            summary = exhaustive_campaign(args.n_max, qp, sink=sink,
                                          workers=args.workers)
        else:
            try:
                k_policy = int(args.k)
            except ValueError:
                k_policy = args.k
            summary = random_campaign((args.n_min, args.n_max), k_policy,
                                      args.trials, args.seed, qp,
                                      sink=sink, workers=args.workers)
        _emit_campaign(summary, reports, args.output, out_stream)
        return 0 if summary.ok else 1
    except SqEnergyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if close_stream:
            out_stream.close()


if __name__ == "__main__":
    sys.exit(main())
