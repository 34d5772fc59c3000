"""Batch command-line interface.

Exit codes: 0 success, 1 an asserted claim failed, 2 usage or input error.
Reports go to stdout unless --out is given; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as verify_mod
from .constructions import binary_caterpillar, dumbbell, path, star, starlike
from .enumeration import free_trees, free_trees_with_internal, random_tree
from .errors import TreeInvError
from .invariants import profile_fast, summarize
from .tree import Tree, from_edge_text, to_edge_text


def parse_construction_spec(spec: str) -> Tree:
    """Build a tree from the mini-language, e.g. path:14, star:5,
    starlike:6,6,1, dumbbell:k=4,a=2,b=3, caterpillar:5."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise TreeInvError(f"bad construction spec {spec!r}: missing ':'")
    try:
        if kind == "path":
            return path(int(rest))
        if kind == "star":
            return star(int(rest))
        if kind == "starlike":
            return starlike([int(x) for x in rest.split(",")])
        if kind == "caterpillar":
            return binary_caterpillar(int(rest))
        if kind == "dumbbell":
            params = {}
            for item in rest.split(","):
                key, eq, value = item.partition("=")
                if not eq:
                    raise TreeInvError(
                        f"bad dumbbell spec {spec!r}: expected k=..,a=..,b=.."
                    )
                params[key.strip()] = int(value)
            if set(params) != {"k", "a", "b"}:
                raise TreeInvError(
                    f"bad dumbbell spec {spec!r}: expected keys k, a, b"
                )
            return dumbbell(params["k"], params["a"], params["b"])
    except ValueError as exc:
        raise TreeInvError(f"bad construction spec {spec!r}: {exc}") from exc
    raise TreeInvError(
        f"unknown construction kind {kind!r} "
        "(choose path, star, starlike, dumbbell, caterpillar)"
    )


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_tree(args) -> Tree:
    if args.gen is not None:
        return parse_construction_spec(args.gen)
    path_ = Path(args.in_file)
    try:
        text = path_.read_text(encoding="utf-8")
    except OSError as exc:
        raise TreeInvError(f"cannot read {path_}: {exc}") from exc
    return from_edge_text(text)


def _cmd_compute(args) -> int:
    tree = _load_tree(args)
    profile = profile_fast(tree)
    summary = summarize(tree, profile)
    if args.format == "csv":
        lines = ["vertex,ecc,uni,delta,dsum"]
        lines.extend(
            f"{v},{profile.ecc[v]},{profile.uni[v]},{profile.delta[v]},{profile.dsum[v]}"
            for v in range(tree.n)
        )
        _write_output("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "n": tree.n,
            "edges": [list(e) for e in tree.edges()],
            "profile": {
                "ecc": list(profile.ecc),
                "uni": list(profile.uni),
                "delta": list(profile.delta),
                "dsum": list(profile.dsum),
            },
            "summary": summary.to_dict(),
        }
        _write_output(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def _cmd_gen(args) -> int:
    tree = parse_construction_spec(args.spec)
    _write_output(to_edge_text(tree), args.out)
    return 0


def _cmd_enum(args) -> int:
    if args.k is not None:
        stream = free_trees_with_internal(args.n, args.k, args.max_order)
    else:
        stream = free_trees(args.n, args.max_order)
    blocks = [to_edge_text(t) for t in stream]
    _write_output("\n".join(blocks), args.out)
    return 0


def _cmd_random(args) -> int:
    _write_output(to_edge_text(random_tree(args.n, args.seed)), args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.claim == "all":
        ids = verify_mod.all_claim_ids()
    else:
        ids = [args.claim]
    reports = verify_mod.verify_all(
        ids,
        max_n=args.max_n,
        workers=args.workers,
        max_order=args.max_order,
        k_max_n=args.k_max_n,
    )
    failed = False
    for report in reports:
        print(
            f"{report.claim}: {report.verdict} "
            f"(n<={report.universe['n']}, {report.universe['count']} trees, "
            f"{report.wall_time:.2f}s)",
            file=sys.stderr,
        )
        if report.verdict == "fails":
            failed = True
    if args.out is not None:
        directory = Path(args.out)
        if len(reports) > 1 or directory.is_dir():
            directory.mkdir(parents=True, exist_ok=True)
            for report in reports:
                suffix = "json" if args.format == "json" else "csv"
                verify_mod.emit_report(
                    report, args.format, directory / f"{report.claim}.{suffix}"
                )
        else:
            verify_mod.emit_report(reports[0], args.format, args.out)
    else:
        if args.format == "json":
            texts = [r.to_json_text().rstrip("\n") for r in reports]
            sys.stdout.write("[\n" + ",\n".join(texts) + "\n]\n")
        else:
            for report in reports:
                sys.stdout.write(report.to_csv_text())
    return 1 if failed else 0


def _cmd_search(args) -> int:
    result = verify_mod.search(
        args.stat,
        args.n,
        k=args.k,
        direction=args.dir,
        workers=args.workers,
        max_order=args.max_order,
    )
    verify_mod.emit_report(result, args.format, args.out or "-")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeinv",
        description="Distance-based invariants of free trees: compute, "
        "construct, enumerate, verify, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="Profile and summary of one tree")
    group = p_compute.add_mutually_exclusive_group(required=True)
    group.add_argument("--in", dest="in_file", help="edge-list file")
    group.add_argument("--gen", help="construction spec, e.g. starlike:6,6,1")
    fmt = p_compute.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json", dest="format", action="store_const", const="json", default="json"
    )
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    p_compute.add_argument("--out", help="output path (default stdout)")
    p_compute.set_defaults(func=_cmd_compute)

    p_gen = sub.add_parser("gen", help="Emit a construction as an edge list")
    p_gen.add_argument("spec", help="e.g. path:14, dumbbell:k=4,a=2,b=3")
    p_gen.add_argument("--out", help="output path (default stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_enum = sub.add_parser("enum", help="Dump all free trees of an order")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--k", type=int, help="filter by internal-vertex count")
    p_enum.add_argument("--max-order", type=int, help="enumeration cap override")
    p_enum.add_argument("--out", help="output path (default stdout)")
    p_enum.set_defaults(func=_cmd_enum)

    p_verify = sub.add_parser("verify", help="Run claims over enumerated universes")
    p_verify.add_argument("--claim", required=True, help="claim id or 'all'")
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument(
        "--k-max-n", type=int, help="smaller order cap for k-filtered claims"
    )
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--format", choices=["json", "csv"], default="json")
    p_verify.add_argument("--max-order", type=int, help="enumeration cap override")
    p_verify.add_argument("--out", help="file (single claim) or directory")
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="Extremal trees for a statistic")
    p_search.add_argument("--stat", required=True, help="Uni, Ecc, Delta, LD, Ecc-LD, delta_min, r-rprime")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--k", type=int)
    p_search.add_argument("--dir", choices=["max", "min"], default="max")
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--format", choices=["json", "csv"], default="json")
    p_search.add_argument("--max-order", type=int, help="enumeration cap override")
    p_search.add_argument("--out", help="output path (default stdout)")
    p_search.set_defaults(func=_cmd_search)

    p_random = sub.add_parser("random", help="One uniform random labeled tree")
    p_random.add_argument("--n", type=int, required=True)
    p_random.add_argument("--seed", type=int, required=True)
    p_random.add_argument("--out", help="output path (default stdout)")
    p_random.set_defaults(func=_cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except TreeInvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())
