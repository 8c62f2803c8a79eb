"""Command-line interface.

Exit codes: 0 success, 1 input error (unreadable file, parse error, bad
argument), 2 input is not a split graph, 3 the graph lacks the requested
representation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .classify import representation_number
from .construct import build_three_uniform_word, verify_construction
from .families import FAMILY_NAMES, FamilySpec, generate
from .graph import Graph, GraphFormatError, find_split_partition, parse_graph
from .labelling import (
    find_comparability_labelling,
    find_wr_labelling,
    labelling_to_json,
)
from .oracle import K_MAX, min_permutational_representation, min_uniform_representation
from .words import format_word, parse_word, represents

EXIT_OK, EXIT_INPUT, EXIT_NOT_SPLIT, EXIT_NO_REP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> Graph:
    try:
        return parse_graph(_read(path))
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj, plain_text: str | None, plain: bool) -> None:
    if plain and plain_text is not None:
        print(plain_text)
    else:
        print(json.dumps(obj, indent=None if plain else 2))


def _recognize_one(path: str) -> tuple[int, dict]:
    try:
        g = _load(path)
    except InputError as exc:
        return EXIT_INPUT, {"file": path, "error": str(exc)}
    verdict = representation_number(g)
    out = {"file": path, **verdict.to_json(g)}
    return (EXIT_OK if verdict.is_split else EXIT_NOT_SPLIT), out


def cmd_recognize(args) -> int:
    if args.jobs > 1 and len(args.paths) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_recognize_one, args.paths))
    else:
        results = [_recognize_one(p) for p in args.paths]
    many = len(results) > 1
    for code, out in results:
        if "error" in out:
            print(out["error"], file=sys.stderr)
            continue
        if args.plain:
            if not out["is_split"]:
                text = "not a split graph"
            elif not out["word_representable"]:
                text = "split, not word-representable"
            else:
                text = f"split, word-representable, R = {out['rep_number']}"
                if out["witness"]:
                    text += f", contains {out['witness']['family']} on {' '.join(out['witness']['vertices'])}"
            print(f"{out['file']}: {text}" if many else text)
        else:
            if not many:
                out.pop("file")
            print(json.dumps(out, indent=None if many else 2))
    return max(code for code, _ in results)


def cmd_represent(args) -> int:
    g = _load(args.path)
    p = find_split_partition(g)
    if p is None:
        print("not a split graph", file=sys.stderr)
        return EXIT_NOT_SPLIT
    lab = find_wr_labelling(g, p)
    if lab is None:
        print("not word-representable: no clique labelling satisfies the interval conditions", file=sys.stderr)
        return EXIT_NO_REP
    trace = build_three_uniform_word(g, p, lab)
    if args.verify:
        report = verify_construction(trace, g)
        if not report:
            bad = report.failures[0]
            raise AssertionError(
                f"constructed word fails on {g.names[bad.u]}, {g.names[bad.v]}: {format_word(bad.pattern, g)}"
            )
    if args.trace:
        print(json.dumps({"labelling": labelling_to_json(g, lab), **trace.to_json(g)}, indent=2))
    else:
        print(format_word(trace.w, g))
    return EXIT_OK


def cmd_label(args) -> int:
    g = _load(args.path)
    p = find_split_partition(g)
    if p is None:
        print("not a split graph", file=sys.stderr)
        return EXIT_NOT_SPLIT
    search = find_comparability_labelling if args.comparability else find_wr_labelling
    lab = search(g, p)
    if lab is None:
        print("no labelling exists", file=sys.stderr)
        return EXIT_NO_REP
    out = labelling_to_json(g, lab)
    text = " ".join(f"{k}={v}" for k, v in out.items())
    _emit(out, text, args.plain)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        spec = FamilySpec(args.family, args.k)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    g, _ = generate(spec)
    sys.stdout.write(g.to_edge_list())
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args.path)
    search = min_permutational_representation if args.permutational else min_uniform_representation
    try:
        found = search(g, args.kmax)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    if found is None:
        _emit({"k": None, "word": None}, f"no representant with k <= {args.kmax}", args.plain)
        return EXIT_NO_REP
    k, w = found
    _emit({"k": k, "word": format_word(w, g).split()}, f"{k}: {format_word(w, g)}", args.plain)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.path)
    text = _read(args.word)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError(f"{args.word}: no word found")
    try:
        w = parse_word(lines[0], g)
    except ValueError as exc:
        raise InputError(f"{args.word}: {exc}") from None
    if set(w) != set(g.vertices):
        missing = sorted(g.names[v] for v in set(g.vertices) - set(w))
        raise InputError(f"{args.word}: word does not use every vertex (missing {' '.join(missing)})")
    report = verify_construction(w, g)
    out = {
        "represents": report.ok,
        "failures": [
            {
                "pair": [g.names[r.u], g.names[r.v]],
                "edge": r.edge,
                "alternates": r.alternates,
                "pattern": format_word(r.pattern, g),
            }
            for r in report.failures
        ],
    }
    assert report.ok == represents(w, g)
    _emit(out, "represents" if report.ok else f"does not represent ({len(out['failures'])} bad pairs)", args.plain)
    return EXIT_OK if report.ok else EXIT_NO_REP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitword",
        description="Word-representability and representation numbers of split graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text, aliases=()):
        sp = sub.add_parser(name, help=help_text, aliases=list(aliases))
        sp.add_argument("--plain", action="store_true", help="plain text instead of JSON")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("recognize", cmd_recognize, "classify graphs (JSON verdict)", aliases=["repnum"])
    sp.add_argument("paths", nargs="+", metavar="PATH")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for several files")

    sp = graph_cmd("represent", cmd_represent, "print a 3-uniform representing word")
    sp.add_argument("path")
    sp.add_argument("--trace", action="store_true", help="print p1, p2, p3, d and the A/B sets as JSON")
    sp.add_argument("--no-verify", dest="verify", action="store_false", help="skip the self-check")

    sp = graph_cmd("label", cmd_label, "print a clique labelling")
    sp.add_argument("path")
    sp.add_argument("--comparability", action="store_true", help="use the transitive-orientation conditions")

    sp = sub.add_parser("generate", help="emit a named graph as an edge list")
    sp.add_argument("family", choices=FAMILY_NAMES)
    sp.add_argument("k", nargs="?", type=int)
    sp.set_defaults(func=cmd_generate)

    sp = graph_cmd("oracle", cmd_oracle, "brute-force minimal uniform representant")
    sp.add_argument("path")
    sp.add_argument("--kmax", type=int, default=K_MAX)
    sp.add_argument("--permutational", action="store_true", help="search concatenations of permutations")

    sp = graph_cmd("verify", cmd_verify, "check a word against a graph")
    sp.add_argument("path")
    sp.add_argument("word", help="file holding the word (vertex names separated by spaces), or -")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
