"""Graph ingestion from DIMACS, edge-list, and JSON inputs.

External labels are mapped to dense 0-based ids at ingestion; the label
table (new id -> original label) is returned alongside the graph so
callers can translate answers back.
"""

from __future__ import annotations

import json

from .graph import Graph

FORMATS = ("dimacs", "edgelist", "json")


class ParseError(ValueError):
    """Malformed graph input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _add_edge(
    edges: list[tuple[int, int]],
    seen: set[tuple[int, int]],
    u: int,
    v: int,
    line: int | None,
) -> None:
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", line)
    key = (min(u, v), max(u, v))
    if key in seen:
        raise ParseError(f"duplicate edge ({u}, {v})", line)
    seen.add(key)
    edges.append(key)


def _parse_dimacs(text: str) -> tuple[Graph, list[str]]:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem header", line_no)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(f"malformed header {line!r}", line_no)
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", line_no) from None
            if n < 0:
                raise ParseError("negative vertex count", line_no)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before problem header", line_no)
            if len(fields) != 3:
                raise ParseError(f"malformed edge line {line!r}", line_no)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", line_no) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range in ({u}, {v})", line_no)
            _add_edge(edges, seen, u - 1, v - 1, line_no)
        else:
            raise ParseError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise ParseError("missing problem header")
    return Graph(n, edges), [str(i + 1) for i in range(n)]


def _parse_edgelist(text: str) -> tuple[Graph, list[str]]:
    labels: list[str] = []
    index: dict[str, int] = {}

    def intern(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two labels, got {line!r}", line_no)
        _add_edge(edges, seen, intern(tokens[0]), intern(tokens[1]), line_no)
    if not labels:
        raise ParseError("empty input")
    return Graph(len(labels), edges), labels


def _parse_json(text: str) -> tuple[Graph, list[str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('expected an object with "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError('"n" must be a nonnegative integer')
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pos, pair in enumerate(data["edges"]):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) for x in pair)
        ):
            raise ParseError(f"edge #{pos} must be a pair of integers")
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge #{pos} endpoint out of range in ({u}, {v})")
        _add_edge(edges, seen, u, v, None)
    return Graph(n, edges), [str(i) for i in range(n)]


def parse_graph(text: str, fmt: str) -> tuple[Graph, list[str]]:
    """Parse graph text in the given format; returns (graph, labels)."""
    if not text.strip():
        raise ParseError("empty input")
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
