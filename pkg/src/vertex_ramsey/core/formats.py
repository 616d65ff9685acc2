#!/usr/bin/env python3
"""
Text formats: graph6 (interchange) and edge lists (human authoring).

graph6 follows the standard formats description: N(n) header, then the
upper triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
packed six bits per character with offset 63 and zero padding.
"""

from typing import List, Optional

from vertex_ramsey.core.graph import Graph, normalize_edge
from vertex_ramsey.errors import MalformedInput

GRAPH6_HEADER = ">>graph6<<"
_SHORT_MAX = 62
_MEDIUM_MAX = 258047
_LONG_MAX = 68719476735


def _encode_n(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    if n <= _LONG_MAX:
        return "~~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (30, 24, 18, 12, 6, 0))
    raise MalformedInput(f"graph6 cannot encode {n} vertices")


def _decode_n(data: List[int]) -> tuple:
    """Return (n, header_length) from 6-bit values."""
    if not data:
        raise MalformedInput("Empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise MalformedInput("Truncated graph6 long-form header")
        n = 0
        for value in data[2:8]:
            n = (n << 6) | value
        return n, 8
    if len(data) < 4:
        raise MalformedInput("Truncated graph6 header")
    n = 0
    for value in data[1:4]:
        n = (n << 6) | value
    return n, 4


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of g (no header, no newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)

    chars = [_encode_n(g.n)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Raises:
        MalformedInput: Bad characters, truncated or over-long payload,
            or non-zero padding bits.
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if line.startswith(":") or line.startswith("&"):
        raise MalformedInput("sparse6/digraph6 input is not graph6")

    data = []
    for ch in line:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise MalformedInput(f"Character {ch!r} outside the graph6 range")
        data.append(code - 63)

    n, offset = _decode_n(data)
    payload = data[offset:]
    n_bits = n * (n - 1) // 2
    expected = (n_bits + 5) // 6
    if len(payload) != expected:
        raise MalformedInput(
            f"graph6 payload for n={n} needs {expected} characters, got {len(payload)}"
        )

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    padding = expected * 6 - n_bits
    if padding and payload[-1] & ((1 << padding) - 1):
        raise MalformedInput("graph6 padding bits must be zero")

    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    """
    Parse an edge list: one "u v" pair per line, optional first line "n=<count>".

    Blank lines and lines starting with '#' are ignored.

    Raises:
        MalformedInput: Non-integer tokens, loops, or ids beyond a declared n.
    """
    declared: Optional[int] = None
    edges = set()
    seen_content = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if seen_content or declared is not None:
                raise MalformedInput(f"Line {lineno}: 'n=' must be the first line")
            try:
                declared = int(line[2:])
            except ValueError:
                raise MalformedInput(f"Line {lineno}: bad vertex count {line[2:]!r}")
            if declared < 0:
                raise MalformedInput(f"Line {lineno}: negative vertex count")
            seen_content = True
            continue
        seen_content = True

        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedInput(f"Line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedInput(f"Line {lineno}: non-integer token in {line!r}")
        if u < 0 or v < 0:
            raise MalformedInput(f"Line {lineno}: negative vertex id")
        if u == v:
            raise MalformedInput(f"Line {lineno}: loop at vertex {u}")
        edges.add(normalize_edge(u, v))

    max_id = max((v for e in edges for v in e), default=-1)
    if declared is None:
        n = max_id + 1
    else:
        if max_id >= declared:
            raise MalformedInput(f"Vertex id {max_id} exceeds declared n={declared}")
        n = declared
    return Graph(n, frozenset(edges))


def write_edge_list(g: Graph) -> str:
    """Edge-list text with an explicit n= header (keeps isolated vertices)."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """
    Parse file contents as graph6 or edge list, sniffed by the first byte.

    graph6 lines start with a character in '?'..'~' (or the >>graph6<<
    header); edge lists start with a digit, 'n=' or a comment.
    """
    stripped = text.lstrip()
    if not stripped:
        raise MalformedInput("Empty graph input")
    first = stripped[0]
    if first.isdigit() or first == "#" or stripped.startswith("n="):
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0])
