"""Command-line interface.

Subcommands: check, chi, critical, decompose, claims, gen, iso.  Graph inputs
are graph6 lines or brace-delimited adjacency lists (autodetected per line; a
``-`` reads stdin).  Exit codes: 0 success / all checks pass, 1 verification
failure, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .canon import are_isomorphic, canonical_form
from .certificates import find_comparable_pair
from .coloring import chromatic_number, clique_number, is_k_vertex_critical
from .decomposition import (
    ALL_CLASSES,
    CLAIM_IDS,
    all_hold,
    decompose,
    verify_all,
)
from .formats import GraphFormatError, read_graphs
from .generate import GenerationSpec, generate_class, search_critical
from .graphs import Graph
from .patterns import all_induced_c5, is_free, pattern_by_name

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _read_input(path: str) -> list[Graph]:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="ascii").read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    # reparse per line so errors can name the line number
    graphs = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        start = i + 1
        i += 1
        if not line:
            continue
        block = line
        if line.startswith("{"):
            while block.count("{") > block.count("}") and i < len(lines):
                block += " " + lines[i].strip()
                i += 1
        try:
            graphs.extend(read_graphs(block))
        except GraphFormatError as exc:
            raise CliError(f"{path}:{start}: {exc}") from exc
    return graphs


def _parse_forbid(text: str):
    if text.strip().lower() in ("", "none"):
        return ()
    try:
        return tuple(pattern_by_name(tok) for tok in text.split(","))
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _cmd_check(args) -> int:
    pats = _parse_forbid(args.forbid)
    graphs = _read_input(args.input)
    status = EXIT_OK
    for idx, g in enumerate(graphs, 1):
        rep = is_free(g, pats)
        if rep.free:
            print(f"graph {idx}: free")
        else:
            print(f"graph {idx}: contains {rep.pattern} at {rep.embedding}")
            status = EXIT_FAIL
    return status


def _cmd_chi(args) -> int:
    for idx, g in enumerate(_read_input(args.input), 1):
        print(f"graph {idx}: n={g.n} omega={clique_number(g)} chi={chromatic_number(g)}")
    return EXIT_OK


def _cmd_critical(args) -> int:
    status = EXIT_OK
    for idx, g in enumerate(_read_input(args.input), 1):
        rep = is_k_vertex_critical(g, args.k)
        verdict = "yes" if rep.vertex_critical else "no"
        if rep.per_vertex and len(set(rep.per_vertex)) == 1:
            drops = f"chi(G-v)={rep.per_vertex[0]} for all {g.n} vertices"
        else:
            drops = "chi(G-v)=" + ",".join(str(c) for c in rep.per_vertex)
        print(f"graph {idx}: vertex-critical: {verdict}; chi={rep.chi}; {drops}")
        if not rep.vertex_critical:
            status = EXIT_FAIL
    return status


def _parse_cycle(text: str):
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise CliError(f"bad cycle spec {text!r}: {exc}") from exc
    if len(parts) != 5:
        raise CliError(f"bad cycle spec {text!r}: need five vertices")
    return parts


def _cmd_decompose(args) -> int:
    graphs = _read_input(args.input)
    for idx, g in enumerate(graphs, 1):
        cycles = [_parse_cycle(args.cycle)] if args.cycle else all_induced_c5(g)
        if not cycles:
            print(f"graph {idx}: no induced 5-cycle")
            continue
        for cycle in cycles:
            try:
                d = decompose(g, cycle)
            except ValueError as exc:
                raise CliError(f"graph {idx}: {exc}") from exc
            print(f"graph {idx}: cycle={cycle}")
            empty = []
            for cls in ALL_CLASSES:
                vs = d.members[cls]
                if vs:
                    print(f"  {cls}: {' '.join(str(v) for v in vs)}")
                else:
                    empty.append(str(cls))
            if empty:
                print(f"  empty: {' '.join(empty)}")
    return EXIT_OK


def _witness_json(report) -> Optional[list[int]]:
    return list(report.witness) if report.witness is not None else None


def _cmd_claims(args) -> int:
    graphs = _read_input(args.input)
    status = EXIT_OK
    for idx, g in enumerate(graphs, 1):
        results = verify_all(g, bypass_hypotheses=args.bypass_hypotheses)
        if not all_hold(results):
            status = EXIT_FAIL
        if args.json:
            for anchor in results:
                for rep in anchor.reports:
                    record = {
                        "graph_index": idx,
                        "cycle": list(anchor.cycle),
                        "claim": rep.claim_id,
                        "tier": rep.tier,
                        "verdict": rep.verdict,
                        "witness": _witness_json(rep),
                    }
                    print(json.dumps(record))
            continue
        if not results:
            print(f"graph {idx}: no induced 5-cycle, nothing to check")
            continue
        for anchor in results:
            print(f"graph {idx}: cycle={anchor.cycle}")
            for rep in anchor.reports:
                line = f"  {rep.claim_id:>3} {rep.verdict}"
                if rep.verdict == "fails":
                    if rep.index is not None:
                        line += f" at i={rep.index + 1}"
                    line += f" witness={rep.witness}"
                elif rep.verdict == "skipped":
                    unmet = [h for h, v in rep.hypotheses.items() if v is False]
                    line += f" (unmet: {', '.join(unmet)})"
                print(line)
    return status


def _cmd_gen(args) -> int:
    forbidden = _parse_forbid(args.forbid)
    if args.n > 9 and not args.allow_slow:
        raise CliError(
            f"n={args.n} can take a long time; pass --allow-slow to confirm"
        )
    if args.n > 9:
        print(f"warning: n={args.n} may take many minutes", file=sys.stderr)
    try:
        spec = GenerationSpec(
            n_max=args.n,
            forbidden=forbidden,
            connected_only=args.connected,
            k=args.critical if args.critical is not None else 5,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.critical is not None:
        result = search_critical(spec, workers=args.workers)
        for row in result.members:
            print(row.canonical.decode("ascii"))
    else:
        for g in generate_class(spec, workers=args.workers):
            print(canonical_form(g).decode("ascii"))
    return EXIT_OK


def _cmd_iso(args) -> int:
    a = _read_input(args.file_a)
    b = _read_input(args.file_b)
    if len(a) != 1 or len(b) != 1:
        raise CliError("iso expects exactly one graph per file")
    if are_isomorphic(a[0], b[0]):
        print("isomorphic")
        return EXIT_OK
    print("not isomorphic")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcrit",
        description="exact coloring, criticality and 5-cycle structure checks "
        "for small graphs (graph6 or adjacency-list input, '-' for stdin)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="induced-pattern freeness verdicts")
    p.add_argument("input")
    p.add_argument("--forbid", default="p5,chair", help="comma list, or 'none'")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("chi", help="order, clique number and chromatic number")
    p.add_argument("input")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("critical", help="k-vertex-criticality reports")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("decompose", help="5-cycle neighborhood class table")
    p.add_argument("input")
    p.add_argument("--cycle", help="v1,v2,v3,v4,v5 (default: all anchors)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("claims", help="run the structure-claim suite")
    p.add_argument("input")
    p.add_argument("--bypass-hypotheses", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_claims)

    p = sub.add_parser("gen", help="enumerate the class, optionally only critical members")
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--forbid", default="p5,chair", help="comma list, or 'none'")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--critical", type=int, default=None, metavar="K")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-slow", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("iso", help="isomorphism verdict for two graphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_iso)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
