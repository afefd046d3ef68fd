"""Edge-list and graph6 codecs.

Edge lists are 1-based: the first significant line holds ``n``, each later
line an edge ``u v``; lines starting with ``#`` and blank lines are ignored.
graph6 support is limited to the single-byte size header (``n <= 62``).
"""

from __future__ import annotations

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str) -> Graph:
    n: int | None = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError(f"expected vertex count, got {line!r}", lineno)
            n = int(fields[0])
            adj = [0] * n
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        for w in (u, v):
            if not 1 <= w <= n:
                raise ParseError(f"vertex {w} out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        u, v = u - 1, v - 1
        if (adj[u] >> v) & 1:
            raise ParseError(f"duplicate edge {u + 1} {v + 1}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n is None:
        raise ParseError("missing vertex count")
    return Graph(n, adj)


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _upper_pairs(n: int):
    # graph6 order: column-major over the upper triangle.
    for j in range(1, n):
        for i in range(j):
            yield i, j


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoder supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [int(g.has_edge(i, j)) for i, j in _upper_pairs(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} at position {pos} outside 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ParseError(f"multi-byte size header not supported (n > {GRAPH6_MAX_N})")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise ParseError(f"trailing data: expected {nbytes} data bytes, got {len(body)}")
    stream = []
    for ch in body:
        value = ord(ch) - 63
        stream.extend((value >> k) & 1 for k in range(5, -1, -1))
    if any(stream[nbits:]):
        raise ParseError("nonzero padding bits")
    adj = [0] * n
    for bit, (i, j) in zip(stream, _upper_pairs(n)):
        if bit:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, adj)
