"""Weighted undirected graphs with optional per-vertex field weights.

Covers the plain edge-list text format, a JSON mirror of the same fields,
and DOT export for rendering clustered graphs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

__all__ = [
    "Graph",
    "GraphFormatError",
    "PALETTE",
    "parse_edge_list",
    "to_edge_list",
    "from_json_dict",
    "to_json_dict",
    "parse_graph",
    "load_graph",
    "to_dot",
]

# Node fill colors for DOT export, indexed by cluster label (wraps around).
PALETTE = (
    "red",
    "blue",
    "green",
    "cyan",
    "magenta",
    "orange",
    "gold",
    "purple",
    "brown",
    "gray",
)

_DIGITS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class GraphFormatError(ValueError):
    """Raised when graph input text cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    """Immutable weighted undirected graph.

    Edges are normalized to ``(i, j, w)`` with ``i < j``, sorted, with at
    most one edge per vertex pair and no self-loops.  ``fields`` holds one
    per-vertex weight ``h_i`` and defaults to all zeros.  Any finite edge
    weight is accepted; clustering semantics usually assume ``w > 0``.
    """

    num_vertices: int
    edges: tuple[tuple[int, int, float], ...] = ()
    fields: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        n = self.num_vertices
        if n < 0:
            raise ValueError(f"num_vertices must be non-negative, got {n}")
        normalized: list[tuple[int, int, float]] = []
        seen: set[tuple[int, int]] = set()
        for edge in self.edges:
            i, j, w = int(edge[0]), int(edge[1]), float(edge[2])
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
            if i > j:
                i, j = j, i
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            if not math.isfinite(w):
                raise ValueError(f"edge ({i}, {j}) has non-finite weight {w}")
            seen.add((i, j))
            normalized.append((i, j, w))
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))

        if len(self.fields) == 0:
            object.__setattr__(self, "fields", (0.0,) * n)
        else:
            fields = tuple(float(h) for h in self.fields)
            if len(fields) != n:
                raise ValueError(
                    f"expected {n} field weights, got {len(fields)}"
                )
            for v, h in enumerate(fields):
                if not math.isfinite(h):
                    raise ValueError(f"vertex {v} has non-finite field weight {h}")
            object.__setattr__(self, "fields", fields)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def zero_field(self) -> bool:
        """True when every per-vertex field weight is zero."""
        return all(h == 0.0 for h in self.fields)

    def has_nonpositive_weight(self) -> bool:
        return any(w <= 0.0 for _, _, w in self.edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    The first significant line must be a header ``n <N>``.  Every other
    line is either an edge ``i j w`` or a field weight ``h i value``.
    ``#`` starts a comment; blank lines are ignored.  Malformed lines,
    out-of-range indices, duplicate edges/fields, and self-loops raise
    :class:`GraphFormatError` naming the offending line.
    """
    n: int | None = None
    edges: list[tuple[int, int, float]] = []
    seen_pairs: set[tuple[int, int]] = set()
    field_values: dict[int, float] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: header must be 'n <N>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: vertex count {tokens[1]!r} is not an integer"
                ) from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be non-negative")
        elif tokens[0] == "h":
            if n is None:
                raise GraphFormatError(f"line {lineno}: field line before 'n <N>' header")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: field line must be 'h i value'")
            try:
                v = int(tokens[1])
                value = float(tokens[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed field line {line!r}") from None
            if not 0 <= v < n:
                raise GraphFormatError(
                    f"line {lineno}: vertex {v} out of range for {n} vertices"
                )
            if v in field_values:
                raise GraphFormatError(f"line {lineno}: duplicate field for vertex {v}")
            field_values[v] = value
        else:
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge line before 'n <N>' header")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: edge line must be 'i j w'")
            try:
                i = int(tokens[0])
                j = int(tokens[1])
                w = float(tokens[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge line {line!r}") from None
            if i == j:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphFormatError(
                    f"line {lineno}: edge ({i}, {j}) out of range for {n} vertices"
                )
            pair = (min(i, j), max(i, j))
            if pair in seen_pairs:
                raise GraphFormatError(f"line {lineno}: duplicate edge {pair}")
            seen_pairs.add(pair)
            edges.append((i, j, w))

    if n is None:
        raise GraphFormatError("missing 'n <N>' header line")
    fields = tuple(field_values.get(v, 0.0) for v in range(n))
    return Graph(n, tuple(edges), fields)


def to_edge_list(graph: Graph) -> str:
    """Serialize to the edge-list text format (canonical edge order)."""
    lines = [f"n {graph.num_vertices}"]
    for i, j, w in graph.edges:
        lines.append(f"{i} {j} {w!r}")
    for v, h in enumerate(graph.fields):
        if h != 0.0:
            lines.append(f"h {v} {h!r}")
    return "\n".join(lines) + "\n"


def from_json_dict(obj: dict) -> Graph:
    """Build a Graph from ``{"n": int, "edges": [[i, j, w], ...], "fields": [...]?}``."""
    if not isinstance(obj, dict):
        raise GraphFormatError("JSON graph must be an object")
    try:
        n = int(obj["n"])
        raw_edges = obj.get("edges", [])
        raw_fields = obj.get("fields", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"invalid JSON graph: {exc}") from None
    try:
        edges = tuple((int(e[0]), int(e[1]), float(e[2])) for e in raw_edges)
        fields = tuple(float(h) for h in raw_fields)
        return Graph(n, edges, fields)
    except (TypeError, ValueError, IndexError) as exc:
        raise GraphFormatError(f"invalid JSON graph: {exc}") from None


def to_json_dict(graph: Graph) -> dict:
    return {
        "n": graph.num_vertices,
        "edges": [[i, j, w] for i, j, w in graph.edges],
        "fields": list(graph.fields),
    }


def parse_graph(text: str) -> Graph:
    """Parse either format: JSON if the text starts with ``{``, else edge list."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
        return from_json_dict(obj)
    return parse_edge_list(text)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def _assignment_labels(assignment) -> list[int]:
    labels = getattr(assignment, "labels", assignment)
    if isinstance(labels, str):
        try:
            return [_DIGITS.index(ch) for ch in labels]
        except ValueError:
            raise ValueError(f"invalid label character in {labels!r}") from None
    return [int(x) for x in labels]


def to_dot(graph: Graph, assignment=None) -> str:
    """Render as an undirected DOT graph.

    When an assignment (label sequence, base-d string, or rich assignment
    object) is supplied, each vertex is filled with a palette color indexed
    by its label.
    """
    lines = ["graph G {"]
    if assignment is not None:
        labels = _assignment_labels(assignment)
        if len(labels) != graph.num_vertices:
            raise ValueError(
                f"assignment length {len(labels)} != num_vertices {graph.num_vertices}"
            )
        lines.append("  node [style=filled];")
        for v in range(graph.num_vertices):
            color = PALETTE[labels[v] % len(PALETTE)]
            lines.append(f'  {v} [fillcolor="{color}"];')
    else:
        for v in range(graph.num_vertices):
            lines.append(f"  {v};")
    for i, j, w in graph.edges:
        lines.append(f'  {i} -- {j} [label="{w:g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
