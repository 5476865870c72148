"""Command-line surface.

Exit codes for ``check``: 0 realizable, 3 not realizable, 4 inconsistent,
1 usage or parse error, 2 internal cross-validation failure.  JSON output
is byte-deterministic for fixed inputs (sorted keys, canonical orderings;
timing is only shown in the human summary).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import pathsys
from pathsys import gallery, graphalg, jsonio, metrizability, topology, witness

EXIT_SM = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2
EXIT_NOT_SM = 3
EXIT_INCONSISTENT = 4

_TAG_EXIT = {
    "strongly_metrizable": EXIT_SM,
    "not_strongly_metrizable": EXIT_NOT_SM,
    "inconsistent": EXIT_INCONSISTENT,
}


def _load_system(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SystemExit(f"error: cannot read {path}: {exc}")
    try:
        return jsonio.load_system(text).system
    except json.JSONDecodeError as exc:
        raise SystemExit(f"error: {path}:{exc.lineno}:{exc.colno}: {exc.msg}")
    except ValueError as exc:
        raise SystemExit(f"error: {path}: {exc}")


def _human_decision(d, out):
    print(f"decision: {d.tag} ({d.setting})", file=out)
    if d.witness_graph is not None:
        for (u, v), w in sorted(d.witness_graph.edges.items()):
            print(f"  w({d.witness_graph.names[u]},{d.witness_graph.names[v]}) = {w}",
                  file=out)
    if d.certificate is not None:
        print(f"  certificate: {d.certificate.system} "
              f"weights {[str(w) for w in d.certificate.weights]}", file=out)
    if d.manifold is not None:
        m = d.manifold
        print(f"  evidence: partner {d.partner}; chi={m.euler_characteristic} "
              f"genus={m.genus} orientable={m.orientable}", file=out)
    ms = d.stats.get("wall_ms")
    if ms is not None:
        print(f"  ({d.stats.get('lp_pivots', 0)} pivots, "
              f"{d.stats.get('oracle_calls', 0)} oracle calls, {ms:.1f} ms)",
              file=out)


def _check_one(args_tuple):
    path, setting, budget = args_tuple
    s = _load_system(path)
    d = metrizability.decide(s, setting, evidence_budget_ms=budget)
    return path, d


def cmd_check(args) -> int:
    target = Path(args.file)
    if args.batch:
        if not target.is_dir():
            print(f"error: --batch expects a directory, got {target}",
                  file=sys.stderr)
            return EXIT_USAGE
        files = sorted(str(p) for p in target.glob("*.json"))
        jobs = [(f, args.setting, args.budget_ms) for f in files]
        worst = EXIT_SM
        with ProcessPoolExecutor() as pool:
            for path, d in pool.map(_check_one, jobs):
                out_path = Path(path).with_suffix(".decision.json")
                out_path.write_text(jsonio.dumps(jsonio.decision_to_dict(d)))
                print(f"{path}: {d.tag}")
                worst = max(worst, _TAG_EXIT[d.tag])
        return worst
    s = _load_system(args.file)
    try:
        d = metrizability.decide(s, args.setting, evidence_budget_ms=args.budget_ms)
    except metrizability.CrossValidationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.dot and d.witness_graph is not None:
        Path(args.dot).write_text(graphalg.to_dot(d.witness_graph))
    if args.json:
        sys.stdout.write(jsonio.dumps(jsonio.decision_to_dict(d)))
    else:
        _human_decision(d, sys.stdout)
    return _TAG_EXIT[d.tag]


def cmd_manifold(args) -> int:
    t1 = _load_system(args.file_t)
    t2 = _load_system(args.file_t_prime)
    if t1.names != t2.names:
        print("error: the two systems must share a node set", file=sys.stderr)
        return EXIT_USAGE
    if not topology.is_polyhedral_pair(t1, t2, args.setting):
        bad = topology.first_non_flat_node(t1, t2, args.setting)
        print(f"not a polyhedral pair (first failing node: {bad})",
              file=sys.stderr)
        return EXIT_USAGE
    cx = topology.build_complex(t1, t2, args.setting)
    report = topology.manifold_report(cx)
    if args.off:
        Path(args.off).write_text(topology.to_off(cx))
    if args.json:
        sys.stdout.write(jsonio.dumps(report.as_dict()))
    else:
        for k, v in sorted(report.as_dict().items()):
            print(f"{k}: {v}")
    return 0


def cmd_gallery(args) -> int:
    if args.name and not args.all:
        try:
            entries = [gallery.by_name(args.name)]
        except KeyError:
            print(f"error: unknown gallery entry {args.name!r}; "
                  f"known: {', '.join(e.name for e in gallery.ENTRIES)}",
                  file=sys.stderr)
            return EXIT_USAGE
    else:
        entries = list(gallery.ENTRIES)
    failures = 0
    for e in entries:
        d = metrizability.decide(e.system, "directed",
                                 evidence_budget_ms=args.budget_ms)
        ok = d.tag == e.expected
        if e.expected == "strongly_metrizable" and ok:
            ok = witness.verify_witness(e.system, d.witness_graph)
        status = "ok" if ok else "MISMATCH"
        print(f"{e.name}: {e.system} -> {d.tag} [{status}]")
        if args.json:
            sys.stdout.write(jsonio.dumps(jsonio.decision_to_dict(d)))
        failures += 0 if ok else 1
    return EXIT_SM if failures == 0 else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pathsys",
        description="Decide unique-shortest-path realizability of path systems.",
        epilog="check exit codes: 0 realizable, 3 not realizable, "
               "4 inconsistent, 1 usage error, 2 internal failure.")
    ap.add_argument("--version", action="version",
                    version=f"pathsys {pathsys.__version__} "
                            f"(schema {pathsys.SCHEMA_VERSION})")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0,
                       help="recorded for reproducibility; the pipelines are deterministic")
        p.add_argument("--budget-ms", type=float, default=1000.0,
                       help="time budget for the polyhedral evidence search")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("check", help="decide one system (or a directory)")
    p.add_argument("file", help="system JSON file, or a directory with --batch")
    p.add_argument("--setting", choices=list(metrizability.SETTINGS),
                   default="directed")
    p.add_argument("--batch", action="store_true",
                   help="treat FILE as a directory of *.json instances")
    p.add_argument("--dot", help="write the witness graph as a DOT file")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("manifold", help="verify a pair and report its surface")
    p.add_argument("file_t")
    p.add_argument("file_t_prime")
    p.add_argument("--setting", choices=["directed", "undirected"],
                   default="directed")
    p.add_argument("--off", help="write the glued complex as an OFF file")
    common(p)
    p.set_defaults(func=cmd_manifold)

    p = sub.add_parser("gallery", help="run the built-in fixtures")
    p.add_argument("name", nargs="?", help="entry name (e.g. OCT1)")
    p.add_argument("--all", action="store_true")
    common(p)
    p.set_defaults(func=cmd_gallery)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "gallery" and not args.name and not args.all:
        print("error: give an entry name or --all", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        raise


if __name__ == "__main__":
    sys.exit(main())
