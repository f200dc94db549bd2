"""Text formats: weighted edge lists, partition files and JSON helpers.

Edge lists look like::

    c optional comment lines
    p wel <n> <m>
    e <u> <v> <weight>

Vertices are 0-indexed.  Weights may be integers, ``p/q`` rationals or
decimals and are read exactly.  Repeated pairs are summed.  The writer
emits one line per stored edge in sorted order with weights as ``p/q``, so
reading a written file and writing it again reproduces it byte for byte.

Partition files have one ``<vertex> <part>`` line per vertex.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

from .errors import InvalidGraphError, InvalidPartitionError, ParseError
from .graph import Partition, WeightedGraph, as_weight, format_weight

__all__ = [
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
    "parse_partition",
    "format_partition",
    "read_partition",
    "write_partition",
    "graph_to_json",
    "graph_from_json",
    "parse_weight",
]


def parse_weight(text: str) -> Fraction:
    try:
        return as_weight(text)
    except InvalidGraphError as exc:
        raise ParseError(str(exc)) from exc


def _data_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> WeightedGraph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, Fraction]] = []
    for lineno, tok in _data_lines(text.splitlines()):
        tag = tok[0]
        if tag == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: second header")
            if len(tok) != 4 or tok[1] != "wel":
                raise ParseError(f"line {lineno}: expected 'p wel <n> <m>'")
            try:
                header = (int(tok[2]), int(tok[3]))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: n and m must be integers") from exc
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"line {lineno}: n and m must be non-negative")
        elif tag == "e":
            if header is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(tok) != 4:
                raise ParseError(f"line {lineno}: expected 'e <u> <v> <weight>'")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: vertex ids must be integers") from exc
            edges.append((u, v, parse_weight(tok[3])))
        else:
            raise ParseError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise ParseError("missing 'p wel <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        return WeightedGraph(n, edges)
    except InvalidGraphError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: WeightedGraph) -> str:
    lines = [f"p wel {g.n} {g.edge_count}"]
    lines += [f"e {u} {v} {format_weight(w)}" for (u, v), w in g.edges.items()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> WeightedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: WeightedGraph, dest: str | Path | TextIO) -> None:
    text = format_graph(g)
    if hasattr(dest, "write"):
        dest.write(text)  # type: ignore[union-attr]
    else:
        Path(dest).write_text(text)


def parse_partition(text: str, n: int | None = None) -> Partition:
    """Read ``<vertex> <part>`` lines; ``k`` is one more than the largest part id.

    ``n`` (when known) must match the number of vertices listed.
    """
    found: dict[int, int] = {}
    for lineno, tok in _data_lines(text.splitlines()):
        if len(tok) != 2:
            raise ParseError(f"line {lineno}: expected '<vertex> <part>'")
        try:
            v, j = int(tok[0]), int(tok[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: vertex and part must be integers") from exc
        if v in found:
            raise ParseError(f"line {lineno}: vertex {v} listed twice")
        if v < 0 or j < 0:
            raise ParseError(f"line {lineno}: negative id")
        found[v] = j
    size = len(found) if n is None else n
    missing = [v for v in range(size) if v not in found]
    extra = [v for v in found if v >= size]
    if missing or extra:
        raise InvalidPartitionError(
            f"partition must list vertices 0..{size - 1} once each "
            f"(missing {missing[:5]}, unexpected {extra[:5]})"
        )
    assignment = tuple(found[v] for v in range(size))
    k = max(assignment, default=-1) + 1
    return Partition(assignment, k)


def format_partition(p: Partition) -> str:
    return "".join(f"{v} {j}\n" for v, j in enumerate(p.assignment))


def read_partition(path: str | Path, n: int | None = None) -> Partition:
    return parse_partition(Path(path).read_text(), n)


def write_partition(p: Partition, path: str | Path) -> None:
    Path(path).write_text(format_partition(p))


def graph_to_json(g: WeightedGraph) -> dict[str, Any]:
    return {"n": g.n, "edges": [[u, v, format_weight(w)] for (u, v), w in g.edges.items()]}


def graph_from_json(data: dict[str, Any]) -> WeightedGraph:
    try:
        return WeightedGraph(int(data["n"]), [(int(u), int(v), parse_weight(str(w))) for u, v, w in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed embedded graph: {exc}") from exc
