"""Text and JSON formats for graphs, posets, words and build results.

Graphs: ``{"vertices": [...], "edges": [[u, v], ...]}`` with an optional
``"parts": {"A": [...], "B": [...]}``, or an edge list with one ``u v`` pair per
line (a lone name is an isolated vertex, ``#`` starts a comment).
Posets: ``{"elements": [...], "covers": [[a, b], ...]}`` meaning a < b, or the
same line format. Words: whitespace-separated names, ``|`` between
permutations. A path of ``-`` reads standard input.
"""

from __future__ import annotations

import json
import re
import sys
from typing import Sequence

from .builder import BuildResult
from .graph import BipartiteGraph, Graph, detect_bipartition
from .poset import Poset
from .words import PermSequence

__all__ = [
    "FormatError",
    "read_text",
    "parse_graph",
    "load_graph",
    "graph_to_json",
    "parse_poset",
    "load_poset",
    "poset_to_json",
    "parse_word",
    "format_perms",
    "format_word",
    "build_sidecar",
]


class FormatError(ValueError):
    """Malformed input; the message names the offending field or line."""


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _natural_key(s: str):
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.findall(r"\d+|\D+", s)]


def _pairs_from_lines(text: str, what: str) -> tuple[list[str], list[tuple[str, str]]]:
    names: set[str] = set()
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            names.add(tokens[0])
        elif len(tokens) == 2:
            names.update(tokens)
            pairs.append((tokens[0], tokens[1]))
        else:
            raise FormatError(f"{what} line {lineno}: expected 'u v', got {raw.strip()!r}")
    return sorted(names, key=_natural_key), pairs


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def _name_list(data: dict, key: str) -> list[str]:
    value = data.get(key)
    if not isinstance(value, list) or not all(isinstance(v, (str, int)) for v in value):
        raise FormatError(f"field '{key}' must be a list of names")
    return [str(v) for v in value]


def _pair_list(data: dict, key: str) -> list[tuple[str, str]]:
    value = data.get(key, [])
    if not isinstance(value, list):
        raise FormatError(f"field '{key}' must be a list of pairs")
    out = []
    for k, item in enumerate(value):
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"field '{key}[{k}]' must be a pair")
        out.append((str(item[0]), str(item[1])))
    return out


def parse_graph(text: str) -> BipartiteGraph:
    """Parse either format; the bipartition comes from ``parts`` or is detected."""
    if text.lstrip().startswith("{"):
        data = _load_json(text)
        if not isinstance(data, dict):
            raise FormatError("graph JSON must be an object")
        names = _name_list(data, "vertices")
        edges = _pair_list(data, "edges")
        parts = data.get("parts")
    else:
        names, edges = _pairs_from_lines(text, "edge")
        parts = None
    known = set(names)
    for k, (u, v) in enumerate(edges):
        for x in (u, v):
            if x not in known:
                raise FormatError(f"field 'edges[{k}]' names unknown vertex {x!r}")
    try:
        g = Graph.from_edges(names, edges)
    except ValueError as exc:
        raise FormatError(f"field 'vertices'/'edges': {exc}") from None
    if parts is None:
        return detect_bipartition(g)
    if not isinstance(parts, dict):
        raise FormatError("field 'parts' must be an object with keys A and B")
    a = _name_list(parts, "A")
    b = _name_list(parts, "B")
    try:
        return BipartiteGraph(g, frozenset(map(g.index, a)), frozenset(map(g.index, b)))
    except (KeyError, ValueError) as exc:
        raise FormatError(f"field 'parts': {exc}") from None


def load_graph(path: str) -> BipartiteGraph:
    return parse_graph(read_text(path))


def graph_to_json(g: BipartiteGraph | Graph, parts: bool = True) -> dict:
    base = g.graph if isinstance(g, BipartiteGraph) else g
    lab = base.labels
    out = {
        "vertices": list(lab),
        "edges": [[lab[u], lab[v]] for u, v in base.edges()],
    }
    if parts and isinstance(g, BipartiteGraph):
        out["parts"] = {
            "A": [lab[v] for v in sorted(g.part_a)],
            "B": [lab[v] for v in sorted(g.part_b)],
        }
    return out


def parse_poset(text: str) -> Poset:
    if text.lstrip().startswith("{"):
        data = _load_json(text)
        if not isinstance(data, dict):
            raise FormatError("poset JSON must be an object")
        names = _name_list(data, "elements")
        covers = _pair_list(data, "covers")
    else:
        names, covers = _pairs_from_lines(text, "cover")
    if len(set(names)) != len(names):
        raise FormatError("field 'elements' has duplicates")
    known = set(names)
    for k, (a, b) in enumerate(covers):
        for x in (a, b):
            if x not in known:
                raise FormatError(f"field 'covers[{k}]' names unknown element {x!r}")
    try:
        return Poset.from_relations(names, covers)
    except ValueError as exc:
        raise FormatError(f"field 'covers': {exc}") from None


def load_poset(path: str) -> Poset:
    return parse_poset(read_text(path))


def poset_to_json(p: Poset) -> dict:
    return {
        "elements": list(p.names),
        "covers": [[p.name_of(a), p.name_of(b)] for a, b in p.cover_pairs()],
    }


def parse_word(text: str, g: Graph) -> tuple[tuple[int, ...], list[tuple[int, ...]] | None]:
    """Vertex ids of the word and, when ``|`` separators are present, its segments."""
    segments = []
    for k, chunk in enumerate(text.split("|")):
        ids = []
        for tok in chunk.split():
            try:
                ids.append(g.index(tok))
            except KeyError:
                raise FormatError(f"word segment {k}: unknown vertex {tok!r}") from None
        segments.append(tuple(ids))
    word = tuple(v for s in segments for v in s)
    return word, (segments if len(segments) > 1 else None)


def format_perms(perms: PermSequence | Sequence[Sequence[int]], labels: Sequence[str]) -> str:
    return " | ".join(" ".join(labels[v] for v in p) for p in perms)


def format_word(word: Sequence[int], labels: Sequence[str]) -> str:
    return " ".join(labels[v] for v in word)


def build_sidecar(result: BuildResult, labels: Sequence[str]) -> dict:
    return {
        "mode": result.mode,
        "side": result.side,
        "chains": [[labels[v] for v in c] for c in result.chain_cover],
        "kappa0": result.kappa0,
    }
