"""Command-line front end.

Payloads go to stdout, commentary to stderr. Exit status: 0 success, 1 a
negative or unattainable result, 2 bad usage or malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import __version__
from .builder import (
    bounds_report,
    construct_best,
    construct_general,
    construct_zeta,
    expand_twins,
)
from .errors import (
    BudgetExceeded,
    InvalidCover,
    MissingVertex,
    NotCycle,
    NotMaximumAntichain,
    NotReduced,
    NotType2,
    OddCycle,
    PrnError,
    SinglePermutation,
    SizeLimit,
    WidthNot2,
    ZetaViolated,
)
from .families import (
    complete_bipartite,
    crown,
    crown_with_pendants,
    crown_with_universal,
    cycle_word,
    extended_crown,
    type2_word,
)
from .graph import BipartiteGraph, reduce
from .io import (
    FormatError,
    build_sidecar,
    format_perms,
    format_word,
    graph_to_json,
    load_graph,
    load_poset,
    parse_word,
    read_text,
)
from .oracle import OracleBudget, bipartite_poset, dimension, dimension_by_extensions, sweep_width2
from .poset import ChainCover
from .words import is_uniform, represents

USAGE_ERRORS = (
    FormatError,
    OddCycle,
    InvalidCover,
    MissingVertex,
    NotMaximumAntichain,
    WidthNot2,
    NotType2,
    NotCycle,
    ValueError,
)
NEGATIVE = (ZetaViolated, BudgetExceeded, SizeLimit, SinglePermutation, NotReduced)


class UsageError(Exception):
    pass


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


# ---------------------------------------------------------------------------
# verbs


def cmd_check_word(args) -> int:
    g = load_graph(args.graph).graph
    try:
        text = read_text(args.word)
    except FileNotFoundError:
        text = args.word  # literal word on the command line
    word, segments = parse_word(text, g)
    verdict = represents(word, g)
    k = is_uniform(word)
    if segments is None and k is not None and len(word) == k * g.n:
        segments = [word[i * g.n:(i + 1) * g.n] for i in range(k)]
    perms = "-"
    if segments and all(len(s) == g.n and len(set(s)) == g.n for s in segments):
        perms = str(len(segments))
    if verdict:
        print(f"OK k-uniform={k if k is not None else '-'} perms={perms}")
        return 0
    u, v = verdict.pair
    lab = g.labels
    adj = "adjacent" if verdict.adjacent else "non-adjacent"
    print(
        f"FAIL pair=({lab[u]},{lab[v]}) {adj} projection={format_word(verdict.projection, lab)}"
    )
    return 1


def _parse_cover(text: str, g: BipartiteGraph) -> tuple[ChainCover, str]:
    chains = []
    for k, chunk in enumerate(text.split(";")):
        names = [s.strip() for s in chunk.split("<") if s.strip()]
        try:
            chains.append(tuple(g.graph.index(s) for s in names))
        except KeyError as exc:
            raise UsageError(f"--cover chain {k}: unknown vertex {exc.args[0]!r}") from None
    flat = [v for c in chains for v in c]
    if not flat:
        raise UsageError("--cover is empty")
    side = "A" if flat[0] in g.part_a else "B"
    return ChainCover(tuple(chains)), side


def cmd_represent(args) -> int:
    g = load_graph(args.graph)
    red = reduce(g)
    h = red.reduced
    if not red.is_identity:
        _say(f"reduced {g.n} -> {h.n} vertices (twin classes merged)")
    side = None if args.side == "auto" else args.side
    cover = None
    if args.cover:
        if not red.is_identity:
            raise UsageError("--cover needs a reduced input graph")
        cover, cover_side = _parse_cover(args.cover, h)
        if side and side != cover_side:
            raise UsageError(f"--cover lists {cover_side}-vertices but --side is {side}")
        side = cover_side
    if args.mode == "general":
        res = construct_general(h, side, cover, block_order=args.block_order)
    elif args.mode == "zeta":
        res = construct_zeta(h, side, cover, block_order=args.block_order)
    else:
        if cover is not None:
            try:
                res = construct_zeta(h, side, cover, block_order=args.block_order)
            except ZetaViolated:
                res = construct_general(h, side, cover, block_order=args.block_order)
        else:
            res = construct_best(h, side)
    _say(f"mode={res.mode} side={res.side} kappa0={res.kappa0} permutations={len(res)}")
    if args.expand_twins and not red.is_identity:
        print(format_perms(expand_twins(res, red), g.labels))
    else:
        if not red.is_identity:
            _say("output is over the reduced graph; pass --expand-twins for the original")
        print(format_perms(res.perms, h.labels))
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            json.dump(build_sidecar(res, h.labels), fh, indent=2)
    return 0


def cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    report = bounds_report(g, with_crown=args.crown, cap=args.cap)
    _emit_json(report.as_dict())
    _say(report.verdict)
    return 0


def cmd_reduce(args) -> int:
    g = load_graph(args.graph)
    red = reduce(g)
    lab, rlab = g.labels, red.reduced.labels
    _emit_json(
        {
            "graph": graph_to_json(red.reduced),
            "twins": {rlab[r]: [lab[v] for v in members] for r, members in enumerate(red.twins)},
        }
    )
    return 0


def _int_args(values: Sequence[str], names: Sequence[str]) -> list[int]:
    if len(values) != len(names):
        raise UsageError(f"expected arguments: {' '.join(names)}")
    out = []
    for name, v in zip(names, values):
        try:
            out.append(int(v))
        except ValueError:
            raise UsageError(f"argument {name} must be an integer, got {v!r}") from None
    return out


def _random_bipartite(na: int, nb: int, p: float, rng: random.Random) -> BipartiteGraph:
    a = [f"a{i}" for i in range(1, na + 1)]
    b = [f"b{j}" for j in range(1, nb + 1)]
    edges = [(x, y) for x in a for y in b if rng.random() < p]
    return BipartiteGraph.from_parts(a, b, edges)


def cmd_generate(args) -> int:
    fam, rest = args.family, args.args
    if fam == "kmn":
        g = complete_bipartite(*_int_args(rest, ["m", "n"]))
    elif fam == "crown":
        g = crown(*_int_args(rest, ["n"]))
    elif fam == "crown-pendant":
        g = crown_with_pendants(*_int_args(rest, ["k", "pa", "pb"]))
    elif fam == "crown-universal":
        g = crown_with_universal(*_int_args(rest, ["k"]))
    elif fam == "random":
        if len(rest) != 3:
            raise UsageError("expected arguments: na nb p")
        na, nb = _int_args(rest[:2], ["na", "nb"])
        try:
            prob = float(rest[2])
        except ValueError:
            raise UsageError(f"argument p must be a number, got {rest[2]!r}") from None
        g = _random_bipartite(na, nb, prob, random.Random(args.seed))
    elif fam in ("ecg", "type2-word", "cycle-word"):
        if len(rest) != 1:
            raise UsageError("expected arguments: POSETFILE")
        p = load_poset(rest[0])
        antichain = None
        if args.antichain:
            names = [s.strip() for s in args.antichain.split(",") if s.strip()]
            by_name = {p.name_of(e): e for e in p.elements}
            missing = [s for s in names if s not in by_name]
            if missing:
                raise UsageError(f"--antichain names unknown elements {missing}")
            antichain = [by_name[s] for s in names]
        ecg = extended_crown(p, antichain)
        if args.graph_out:
            with open(args.graph_out, "w", encoding="utf-8") as fh:
                json.dump(graph_to_json(ecg.graph), fh, indent=2)
        if fam == "type2-word":
            print(format_perms(type2_word(p, antichain), ecg.graph.labels))
            return 0
        if fam == "cycle-word":
            print(format_word(cycle_word(p, antichain), ecg.graph.labels))
            return 0
        g = ecg.graph
    else:
        raise UsageError(f"unknown family {fam!r}")
    _emit_json(graph_to_json(g))
    return 0


def cmd_oracle(args) -> int:
    budget = OracleBudget(max_elements=args.max_elements, max_realizer_size=args.max_realizer)
    if args.what == "prn":
        g = load_graph(args.file)
        p = bipartite_poset(g)
        labels = g.labels
    else:
        p = load_poset(args.file)
        labels = None
    solver = dimension if args.method == "coloring" else dimension_by_extensions
    dim, realizer = solver(p, budget)
    print(dim)
    if labels is None:
        print(" | ".join(" ".join(p.name_of(e) for e in ext) for ext in realizer.linexts))
    else:
        print(format_perms(realizer.linexts, labels))
    return 0


def cmd_sweep(args) -> int:
    report = sweep_width2(args.max_n)
    sys.stdout.write(report.jsonl())
    _say(f"{len(report.rows)} posets, {len(report.mismatches)} mismatches")
    return 1 if report.mismatches else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bipartite-prn",
        description="Permutational representations of bipartite graphs.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized generators")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-word", help="check whether a word represents a graph")
    p.add_argument("graph", help="graph file (JSON or edge list), '-' for stdin")
    p.add_argument("word", help="word file, '-' for stdin, or the word itself")
    p.set_defaults(func=cmd_check_word)

    p = sub.add_parser("represent", help="build a permutational representation")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["auto", "general", "zeta"], default="auto")
    p.add_argument("--side", choices=["auto", "A", "B"], default="auto")
    p.add_argument("--cover", help="chain cover such as '3<5<1;7'")
    p.add_argument("--block-order", choices=["containment", "index"], default="containment")
    p.add_argument("--expand-twins", action="store_true")
    p.add_argument("--sidecar", help="write {mode, side, chains, kappa0} JSON here")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("bounds", help="bounds report as JSON")
    p.add_argument("graph")
    p.add_argument("--crown", action="store_true", help="also run the crown and forbidden-subgraph searches")
    p.add_argument("--cap", type=int, default=20, help="vertex cap for the crown search")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("reduce", help="merge vertices with equal neighborhoods")
    p.add_argument("graph")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", help="generate a family member")
    p.add_argument(
        "family",
        choices=["kmn", "crown", "crown-pendant", "crown-universal", "ecg", "type2-word", "cycle-word", "random"],
    )
    p.add_argument("args", nargs="*")
    p.add_argument("--antichain", help="comma-separated maximum antichain for ecg")
    p.add_argument("--graph-out", help="also write the extended crown graph JSON here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="exact prn or dimension by brute force")
    p.add_argument("what", choices=["prn", "dim"])
    p.add_argument("file")
    p.add_argument("--max-elements", type=int, default=OracleBudget.max_elements)
    p.add_argument("--max-realizer", type=int, default=OracleBudget.max_realizer_size)
    p.add_argument("--method", choices=["coloring", "extensions"], default="coloring")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="exhaustive width-two extended crown sweep")
    p.add_argument("family", choices=["width2"])
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_sweep)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _say(f"error: {exc}")
        return 2
    except NEGATIVE as exc:
        _say(f"{type(exc).__name__}: {exc}")
        return 1
    except USAGE_ERRORS as exc:
        _say(f"error: {type(exc).__name__}: {exc}")
        return 2
    except OSError as exc:
        _say(f"error: {exc}")
        return 2
    except PrnError as exc:
        _say(f"{type(exc).__name__}: {exc}")
        return 1


def main() -> None:
    sys.exit(run())
