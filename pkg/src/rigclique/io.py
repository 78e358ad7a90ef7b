"""Plain-text codecs for graphs and label sets.

Graph file: header line "n e", then e lines "u v".
Label file: header line "n m", then n lines "v: i1 i2 ..." with v ascending
from 0; a vertex without labels is written as "v:".

Lines starting with '#' are skipped on input. Writers emit canonical form:
ascending order, single spaces, LF line endings. decode(encode(x)) == x, and
encode(decode(t)) == t for canonical t.
"""

from __future__ import annotations

from .graph import Graph, LabelRepresentation, build_graph


class FormatError(ValueError):
    """Raised for text that does not follow the file format."""


def _content_lines(text: str) -> list[str]:
    return [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"non-numeric {what} {token!r}") from None


def _header(lines: list[str], second_field: str) -> tuple[int, int]:
    if not lines:
        raise FormatError("missing header line")
    toks = lines[0].split()
    if len(toks) != 2:
        raise FormatError(f"malformed header {lines[0]!r}: expected 'n {second_field}'")
    return _int(toks[0], "vertex count"), _int(toks[1], second_field)


def decode_graph(text: str) -> Graph:
    """Parse a graph file. Structural validation is left to build_graph, so
    e.g. a self-loop line is reported as a self-loop, not a syntax error."""
    lines = _content_lines(text)
    n, e = _header(lines, "edge count")
    if len(lines) - 1 != e:
        raise FormatError(f"expected {e} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise FormatError(f"malformed edge line {ln!r}: expected 'u v'")
        edges.append((_int(toks[0], "endpoint"), _int(toks[1], "endpoint")))
    return build_graph(n, edges)


def encode_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def decode_labels(text: str) -> LabelRepresentation:
    """Parse a label file. Vertex lines must appear in ascending order with
    no gaps; label ids must lie in 0..m-1."""
    lines = _content_lines(text)
    n, m = _header(lines, "label count")
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} vertex lines, found {len(lines) - 1}")
    label_sets = []
    for v, ln in enumerate(lines[1:]):
        toks = ln.split()
        if not toks or toks[0] != f"{v}:":
            raise FormatError(f"vertex line {ln!r}: expected prefix '{v}:'")
        labels = [_int(t, "label id") for t in toks[1:]]
        for i in labels:
            if not (0 <= i < m):
                raise FormatError(f"label {i} out of range for m={m} (vertex {v})")
        label_sets.append(labels)
    return LabelRepresentation(n, m, label_sets)


def encode_labels(rep: LabelRepresentation) -> str:
    lines = [f"{rep.n} {rep.m}"]
    for v in range(rep.n):
        s = rep.label_sets[v]
        if s:
            lines.append(f"{v}: " + " ".join(str(i) for i in sorted(s)))
        else:
            lines.append(f"{v}:")
    return "\n".join(lines) + "\n"
