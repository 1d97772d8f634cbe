"""Command-line interface.

Exit codes: 0 = property holds / solution found; 1 = property fails / no
solution (still a valid run); 2 = input error; 3 = resource cap exceeded.
JSON output (--json) emits the certificate schemas documented in docs/schemas.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .bivariegation import (
    bivariegation_certificate,
    fixed_point_check,
    solve_line_graph_equation,
    solve_nested_equation,
)
from .degseq import (
    admissible_partitions,
    forcibly_bivariegated_line_graphic,
    parse_degree_sequence,
    potentially_bivariegated_line_graphic,
    realize_partition,
)
from .errors import InputError, ResourceLimitError
from .graph import Graph, family
from .io import parse_graph, to_edge_list_text, to_graph6
from .linegraph import iterated_line_graph, krausz_partition, line_graph
from .scans import DEFAULT_MAX_ORDER, SCAN_PROPERTIES, scan
from .spectra import spectrum_complete_bivariegated, verify_polynomial_identity

_FAMILY_RE = re.compile(r"^([a-z_0-9]+)\s*(?:\(\s*([0-9,\s]*)\s*\))?$")


def _graph_from_args(args: argparse.Namespace) -> Graph:
    sources = [s for s in (args.input, args.graph6, args.family) if s]
    if len(sources) != 1:
        raise InputError("exactly one input source required: FILE, --graph6, or --family")
    if args.family:
        m = _FAMILY_RE.match(args.family.strip())
        if not m:
            raise InputError(f"bad family spec {args.family!r}, e.g. cycle(8) or petersen")
        params = [int(t) for t in m.group(2).split(",")] if m.group(2) else []
        return family(m.group(1), *params)
    if args.graph6:
        return parse_graph(args.graph6, "graph6")
    text = Path(args.input).read_text() if args.input != "-" else sys.stdin.read()
    return parse_graph(text, args.format)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file (edge list or graph6); '-' for stdin")
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--family", help="named family, e.g. 'petersen', 'cycle(8)', 'complete_bipartite(2,3)'")
    p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(human)


def _graph_payload(g: Graph) -> dict:
    return {"order": g.n, "size": g.edge_count(), "graph6": to_graph6(g)}


def _cmd_check(args) -> int:
    g = _graph_from_args(args)
    if args.what == "biv":
        cert = bivariegation_certificate(g)
        if cert is None:
            _emit(args, {"bivariegated": False, "certificate": None},
                  "not 2-variegated")
            return 1
        _emit(args, {"bivariegated": True, "certificate": cert.to_json()},
              "2-variegated\n" + json.dumps(cert.to_json()))
        return 0
    kp = krausz_partition(g)
    if kp is None:
        _emit(args, {"line_graph": False}, "not a line graph")
        return 1
    payload = {
        "line_graph": True,
        "cliques": [sorted(c) for c in kp.cliques],
        "root": _graph_payload(kp.root),
        "edge_map": [[list(e), v] for e, v in kp.root_edge_map],
    }
    _emit(args, payload,
          f"line graph of a graph on {kp.root.n} vertices (graph6 {to_graph6(kp.root)})")
    return 0


def _cmd_linegraph(args) -> int:
    g = _graph_from_args(args)
    if args.iterate == 1:
        res = line_graph(g)
        payload = {"graph": _graph_payload(res.graph),
                   "edge_map": [[list(e), i] for i, e in enumerate(res.edge_map)]}
        out = res.graph
    else:
        out = iterated_line_graph(g, args.iterate)
        payload = {"graph": _graph_payload(out), "iterations": args.iterate}
    _emit(args, payload, to_edge_list_text(out).rstrip("\n"))
    return 0


def _cmd_solve(args) -> int:
    g = _graph_from_args(args)
    if args.what == "lg":
        verdict = solve_line_graph_equation(g)
        _emit(args, verdict.to_json(),
              ("solution: line graph is 2-variegated" if verdict.solution
               else "no solution: line graph is not 2-variegated"))
        return 0 if verdict.solution else 1
    verdict = solve_nested_equation(g)
    ok = verdict.nested_witness is not None
    _emit(args, verdict.to_json(),
          ("nested solution found: graph and its line graph are both 2-variegated"
           if ok else "no nested solution"))
    return 0 if ok else 1


def _cmd_fixed_point(args) -> int:
    g = _graph_from_args(args)
    verdict = fixed_point_check(g)
    _emit(args, verdict.to_json(), verdict.conclusion.replace("_", " "))
    return 0 if verdict.fixed else 1


def _cmd_degseq(args) -> int:
    if args.what == "partitions":
        parts = admissible_partitions(args.n)
        payload = {"n": args.n, "count": len(parts),
                   "partitions": [p.to_json() for p in parts]}
        human = "\n".join(f"{list(p.side_a)} | {list(p.side_b)}" for p in parts)
        _emit(args, payload, human)
        return 0
    seq = parse_degree_sequence(args.sequence)
    if args.what == "forcibly":
        verdict = forcibly_bivariegated_line_graphic(seq)
        _emit(args, {"sequence": list(seq), "forcibly": verdict},
              "forcibly 2-variegated line graphic" if verdict else "not forcibly")
        return 0 if verdict else 1
    part = potentially_bivariegated_line_graphic(seq)
    if args.what == "check":
        if part is None:
            _emit(args, {"sequence": list(seq), "potentially": False, "partition": None},
                  "not potentially 2-variegated line graphic")
            return 1
        _emit(args, {"sequence": list(seq), "potentially": True, "partition": part.to_json()},
              f"admissible partition: {list(part.side_a)} | {list(part.side_b)}")
        return 0
    # realize
    if part is None:
        _emit(args, {"sequence": list(seq), "graph": None},
              "not realizable as a 2-variegated line graph")
        return 1
    g = realize_partition(part)
    _emit(args, {"sequence": list(seq), "partition": part.to_json(),
                 "graph": _graph_payload(g)},
          to_edge_list_text(g).rstrip("\n"))
    return 0


def _cmd_spectra(args) -> int:
    report = spectrum_complete_bivariegated(args.n)
    identity_ok, residual = verify_polynomial_identity(args.n)
    payload = report.to_json()
    payload["polynomial_identity"] = identity_ok
    if residual is not None:
        payload["residual"] = residual
    ok = identity_ok and all(report.verified.values()) and report.complete
    human = [
        f"n={args.n}: eigenvalue multiplicities "
        + ", ".join(f"{lam}:{m}" for lam, m in sorted(report.multiplicities.items(), reverse=True)),
        f"all multiplicities certified by exact nullity: {all(report.verified.values())}",
        f"all-ones eigenvector (row sums = n): {report.all_ones_eigenvector}",
        f"polynomial identity P(A) = J: {identity_ok}",
    ]
    if args.dump_matrix:
        from .graph import complete_bivariegated  # noqa: PLC0415
        from .spectra import adjacency_matrix  # noqa: PLC0415

        human += [" ".join(str(x) for x in row)
                  for row in adjacency_matrix(complete_bivariegated(args.n))]
    _emit(args, payload, "\n".join(human))
    return 0 if ok else 1


def _cmd_scan(args) -> int:
    report = scan(args.property, max_order=args.max_order, jobs=args.jobs,
                  connected_only=False if args.include_disconnected else None)
    if args.json:
        sys.stdout.write(report.to_json_text())
    else:
        print(f"{report.property_id}: checked={report.checked} "
              f"confirmed={report.confirmed} "
              f"counterexamples={len(report.counterexamples)} "
              f"skipped={len(report.skipped)}")
        for c in report.counterexamples:
            print("  counterexample:", json.dumps(c, sort_keys=True))
        for s in report.skipped:
            print("  skipped:", json.dumps(s, sort_keys=True))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bivarieg",
        description="2-variegated graphs and line graphs: checks, solvers, "
                    "degree sequences, exact spectra, exhaustive scans.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide a graph property with a certificate")
    p.add_argument("what", choices=["biv", "line"])
    _add_graph_input(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("linegraph", help="construct the (iterated) line graph")
    p.add_argument("--iterate", type=int, default=1, metavar="K")
    _add_graph_input(p)
    p.set_defaults(fn=_cmd_linegraph)

    p = sub.add_parser("solve", help="line-graph equation solvers")
    p.add_argument("what", choices=["lg", "nested"])
    _add_graph_input(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("fixed-point", help="is the graph its own line graph?")
    _add_graph_input(p)
    p.set_defaults(fn=_cmd_fixed_point)

    p = sub.add_parser("degseq", help="degree-sequence characterization")
    dsub = p.add_subparsers(dest="what", required=True)
    for what, needs_seq in (("check", True), ("realize", True),
                            ("forcibly", True), ("partitions", False)):
        d = dsub.add_parser(what)
        if needs_seq:
            d.add_argument("sequence", help='e.g. "3^3,1^3" or "3 3 3 1 1 1"')
        else:
            d.add_argument("n", type=int)
        d.add_argument("--json", action="store_true")
        d.set_defaults(fn=_cmd_degseq, what=what)

    p = sub.add_parser("spectra", help="exact spectral verification of two "
                                       "K_n's joined by a perfect matching")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dump-matrix", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_spectra)

    p = sub.add_parser("scan", help="exhaustive corpus scan of one property")
    p.add_argument("property", choices=list(SCAN_PROPERTIES))
    p.add_argument("--max-order", type=int, default=None,
                   help=f"cap (defaults per property: {DEFAULT_MAX_ORDER})")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes (output independent of this)")
    p.add_argument("--include-disconnected", action="store_true",
                   help="scan disconnected graphs too, even for claims stated "
                        "for connected graphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_scan)
    return ap


def run(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
