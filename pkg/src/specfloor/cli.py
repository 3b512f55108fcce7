"""Command-line front end.

Exit codes: 0 success, 1 computation refused by a size guard, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from . import catalog as cat
from .extremal import build_crowded_parade, is_crowded_parade, parse_spec, verify_maximality
from .floor import FloorMemo, spectator_floor, spectator_floor_bruteforce
from .graph import GraphError, MultiGraph, SizeGuardError, is_connected
from .io import FormatError, ParseError, encode, read_graphs
from .lists import verify_disconnected, verify_list
from .minimality import is_minor_minimal
from .named import name_of
from .parade import parade_number_bfs, parade_number_matrix

EXIT_OK, EXIT_REFUSED, EXIT_IO = 0, 1, 2


def _unescape(text: str) -> str:
    return text.replace("\\n", "\n").replace(";", "\n")


def _load_graphs(args) -> list[MultiGraph]:
    if args.edges is not None:
        return list(read_graphs(_unescape(args.edges), "edges"))
    if args.graph is not None:
        return list(read_graphs(args.graph, args.format))
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text(encoding="utf-8")
    return list(read_graphs(text, args.format))


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file (graph6/sparse6: one per line; edge list: one graph); '-' for stdin")
    p.add_argument("--format", choices=["auto", "graph6", "sparse6", "edges"], default="auto")
    p.add_argument("--edges", help="inline edge list, lines separated by newlines, '\\n' or ';'")
    p.add_argument("--graph", help="inline graph6/sparse6 string")
    p.add_argument("--json", action="store_true", help="one JSON object per graph")


def _emit(args, obj: dict, text: str) -> None:
    print(json.dumps(obj, sort_keys=True) if args.json else text)


def _base(g: MultiGraph) -> dict:
    cert = parade_number_bfs(g)
    return {
        "encoding": encode(g),
        "n": g.n,
        "e": g.num_edges,
        "usp": cert.usp,
        "uspc": cert.uspc,
        "witnesses": {"parade": list(cert.witness)},
    }


def cmd_usp(args) -> int:
    for g in _load_graphs(args):
        obj = _base(g)
        if args.check and is_connected(g):
            obj["usp_matrix"] = parade_number_matrix(g).usp
        _emit(args, obj, f"{obj['encoding']}\tn={g.n}\te={g.num_edges}\tusp={obj['usp']}\tuspc={obj['uspc']}\tparade={obj['witnesses']['parade']}")
    return EXIT_OK


def cmd_floor(args) -> int:
    for g in _load_graphs(args):
        obj = _base(g)
        fc = spectator_floor(g, args.max_mult)
        obj["uspcf"] = fc.uspcf
        obj["lower_bound"] = fc.lower_bound_used
        obj["witnesses"]["floor_supergraph"] = encode(fc.witness)
        obj["witnesses"]["floor_parade"] = list(parade_number_bfs(fc.witness).witness)
        if args.bruteforce:
            obj["uspcf_bruteforce"] = spectator_floor_bruteforce(g, args.max_mult)
        _emit(
            args,
            obj,
            f"{obj['encoding']}\tn={g.n}\te={g.num_edges}\tusp={obj['usp']}\tuspc={obj['uspc']}"
            f"\tuspcf={fc.uspcf}\twitness={encode(fc.witness)}",
        )
    return EXIT_OK


def cmd_minimal(args) -> int:
    memo = FloorMemo()
    for g in _load_graphs(args):
        simple_mode = args.mode == "simple" or (args.mode == "auto" and g.is_simple)
        v = is_minor_minimal(g, simple_mode, memo)
        obj = {"encoding": encode(g), "n": g.n, "uspcf": v.floor, "minimal": v.minimal}
        if not v.minimal:
            obj["witness_minor"] = encode(v.minor)
            obj["witness_step"] = [v.step.kind, v.step.target]
        extra = "" if v.minimal else f"\tminor={encode(v.minor)} via {v.step.kind} {v.step.target}"
        _emit(args, obj, f"{obj['encoding']}\tuspcf={v.floor}\tminimal={v.minimal}{extra}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    records = cat.build_catalog(
        args.source, args.max_n, args.mode, faithful=args.faithful, jobs=args.jobs, force=args.force
    )
    if args.out:
        cat.write_catalog(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
    else:
        sys.stdout.write(cat.format_catalog(records))
    return EXIT_OK


def cmd_query(args) -> int:
    minimal = None if args.minimal is None else args.minimal == "true"
    key = args.key
    if args.key_of is not None:
        key = next(read_graphs(args.key_of, "auto")).key.hex()
    rows = cat.query_catalog(args.store, n=args.n, max_n=args.max_n, uspcf=args.uspcf, minimal=minimal, key=key)
    for r in rows:
        name = name_of(r.graph()) or ""
        if args.json:
            print(json.dumps({"encoding": r.encoding, "n": r.n, "e": r.e, "uspc": r.uspc, "uspcf": r.uspcf, "minimal": r.minimal, "key": r.key, "name": name}, sort_keys=True))
        else:
            print(f"{r.to_line()}\t{name}")
    return EXIT_OK


def cmd_extremal(args) -> int:
    if args.action == "build":
        spec = parse_spec(args.spec)
        g = build_crowded_parade(spec)
        obj = {"spec": str(spec), "encoding": encode(g), "n": g.n, "e": g.num_edges, "floor": spec.floor}
        _emit(args, obj, f"{encode(g)}\tn={g.n}\tfloor={spec.floor}")
        return EXIT_OK
    memo = FloorMemo()
    for g in _load_graphs(args):
        if args.action == "check":
            spec = is_crowded_parade(g, args.m)
            obj = {"encoding": encode(g), "crowded": spec is not None, "spec": str(spec) if spec else None}
            _emit(args, obj, f"{encode(g)}\t{'crowded ' + str(spec) if spec else 'not crowded'}")
        else:
            ok = verify_maximality(g, args.m, memo)
            obj = {"encoding": encode(g), "maximal": ok, "uspcf": memo.value(g), "m": args.m}
            _emit(args, obj, f"{encode(g)}\tuspcf={memo.value(g)}\tmaximal={ok}")
    return EXIT_OK


def cmd_verify_lists(args) -> int:
    memo = FloorMemo()
    ks = [args.k] if args.k is not None else [0, 1, 2]
    ok = True
    for k in ks:
        rep = verify_list(k, args.mode, args.max_n, memo)
        ok &= rep.passed
        for line in rep.lines():
            print(line)
    if 2 in ks:
        for name, good in verify_disconnected(args.mode, memo):
            ok &= good
            print(f"{'PASS' if good else 'FAIL'} disconnected member {name} is minimal with floor 2")
    return EXIT_OK if ok else EXIT_REFUSED


def cmd_selftest(args) -> int:
    from . import census

    rng = random.Random(args.seed)
    bad = 0
    checked = 0
    for n in range(1, args.max_n + 1):
        for g in census.connected_graphs(n):
            checked += 1
            if parade_number_matrix(g).usp != parade_number_bfs(g).usp:
                bad += 1
                print(f"FAIL parade routes disagree on {encode(g)}")
            if n <= 6 and spectator_floor(g).uspcf != spectator_floor_bruteforce(g):
                bad += 1
                print(f"FAIL floor routes disagree on {encode(g)}")
    for _ in range(args.samples):
        n = rng.randint(1, 6)
        g = MultiGraph.from_pairs(n, {(i, j): rng.choice((0, 0, 1, 2)) for i in range(n) for j in range(i + 1, n)})
        checked += 1
        if n <= 4 and spectator_floor(g).uspcf != spectator_floor_bruteforce(g):
            bad += 1
            print(f"FAIL floor routes disagree on {encode(g)}")
        if is_connected(g) and parade_number_matrix(g).usp != parade_number_bfs(g).usp:
            bad += 1
            print(f"FAIL parade routes disagree on {encode(g)}")
    print(f"{'PASS' if not bad else 'FAIL'} selftest: {checked} graphs, {bad} mismatches (seed {args.seed})")
    return EXIT_OK if not bad else EXIT_REFUSED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="specfloor", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("usp", help="parade number and spectator number")
    _add_input(p)
    p.add_argument("--check", action="store_true", help="also run the matrix-power route")
    p.set_defaults(func=cmd_usp)

    p = sub.add_parser("floor", help="spectator floor with witness supergraph")
    _add_input(p)
    p.add_argument("--max-mult", type=int, choices=[1, 2], default=None)
    p.add_argument("--bruteforce", action="store_true", help="also run the exhaustive oracle")
    p.set_defaults(func=cmd_floor)

    p = sub.add_parser("minimal", help="minor-minimality for the spectator floor")
    _add_input(p)
    p.add_argument("--mode", choices=["auto", "simple", "multi"], default="auto")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("catalog", help="build a census dataset")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--mode", choices=["simple", "multi"], default="simple")
    p.add_argument("--source", default="gen", help="'gen' or 'file:<path>' (graph6/sparse6 lines)")
    p.add_argument("--out")
    p.add_argument("--faithful", action="store_true", help="exhaustive supergraph sweep per graph")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true", help="override the max-n guard")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("query", help="filter a stored catalog")
    p.add_argument("store")
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--uspcf", type=int)
    p.add_argument("--minimal", choices=["true", "false"])
    p.add_argument("--key", help="canonical key (hex)")
    p.add_argument("--key-of", help="graph6/sparse6 string whose canonical key to match")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("extremal", help="saturated crowded parades")
    p.add_argument("action", choices=["build", "check", "verify"])
    p.add_argument("spec", nargs="?", help="for build: p,m,[m1,...]")
    p.add_argument("--input", dest="input")
    p.add_argument("--format", choices=["auto", "graph6", "sparse6", "edges"], default="auto")
    p.add_argument("--edges")
    p.add_argument("--graph")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify-lists", help="reproduce the floor-0/1/2 minimal lists")
    p.add_argument("--k", type=int, choices=[0, 1, 2])
    p.add_argument("--mode", choices=["simple", "multi"], default="simple")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_verify_lists)

    p = sub.add_parser("selftest", help="oracle cross-checks")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (OSError, ParseError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
