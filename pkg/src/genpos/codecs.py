"""Text formats: graph6 (short form) and plain edge lists."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import ParseError
from .graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


def parse_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise ParseError("empty graph6 string")
    codes = [ord(c) - 63 for c in line]
    if any(not 0 <= c < 64 for c in codes):
        raise ParseError(f"illegal graph6 character in {line!r}")
    n = codes[0]
    if n > GRAPH6_MAX_N:
        raise ParseError("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    payload = codes[1:]
    if len(payload) != (nbits + 5) // 6:
        raise ParseError(f"graph6 payload has {len(payload)} chars, expected {(nbits + 5) // 6}")
    bits = []
    for c in payload:
        bits.extend((c >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("non-zero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ParseError("long-form graph6 (n > 62) is not supported")
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def read_graph6_lines(path) -> Iterator[tuple[int, str, Graph | ParseError]]:
    """Yield ``(line_no, text, graph_or_error)`` for each non-blank line.

    Parse failures are yielded rather than raised so a scan can report
    them and carry on.
    """
    with open(path, encoding="ascii") as fh:
        for no, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text or text == GRAPH6_HEADER:
                continue
            try:
                yield no, text, parse_graph6(text)
            except ParseError as exc:
                yield no, text, exc


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n, m = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
    except ValueError:
        raise ParseError("edge list lines must be integer pairs") from None
    if any(len(e) != 2 for e in edges):
        raise ParseError("edge list lines must be integer pairs")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())
