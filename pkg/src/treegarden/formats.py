"""Parsers and writers: graph6, incidence-matrix text, edge lists, DOT.

graph6 follows the nauty convention: byte offset 63, upper-triangle
adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
six per byte most-significant first, with an optional ">>graph6<<" header.
Only the short form (n <= 62) is supported.
"""

from .errors import (
    BadCharError,
    BadColumnError,
    BadTokenError,
    CountMismatchError,
    EmptyInputError,
    FormatError,
    LongFormUnsupportedError,
    RaggedRowsError,
    TooLargeError,
    TrailingGarbageError,
    TruncatedLineError,
    UnknownEdgeError,
)
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_VERTICES = 62


def parse_graph6(line):
    """Decode one graph6 line (optionally headered) into a Graph."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise EmptyInputError("empty graph6 line")
    vals = []
    for ch in s:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise BadCharError(f"byte {b} outside graph6 range 63..126")
        vals.append(b - 63)
    if vals[0] == 63:
        raise LongFormUnsupportedError("graph6 long form (n >= 63) not supported")
    n = vals[0]
    if n == 0:
        raise FormatError("graphs must have at least one vertex")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[1:]
    if len(body) < nbytes:
        raise TruncatedLineError(f"expected {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingGarbageError("excess bytes after adjacency data")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    # padding bits must be zero
    while k < 6 * nbytes:
        if (body[k // 6] >> (5 - k % 6)) & 1:
            raise TrailingGarbageError("nonzero padding bits")
        k += 1
    return Graph(n, edges)


def encode_graph6(g):
    """Encode a Graph as one graph6 line (no header, no newline)."""
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise TooLargeError(f"graph6 short form supports at most {MAX_GRAPH6_VERTICES} vertices")
    adj = set(g.normalized_edges())
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_incidence(text):
    """Parse an n-row by m-column whitespace-separated 0/1 incidence matrix."""
    rows = text.splitlines()
    if not rows:
        raise EmptyInputError("empty incidence input")
    grid = [row.split() for row in rows]
    width = len(grid[0])
    for r, row in enumerate(grid):
        if len(row) != width:
            raise RaggedRowsError(f"row {r} has {len(row)} tokens, expected {width}")
        for tok in row:
            if tok not in ("0", "1"):
                raise BadTokenError(f"row {r}: token {tok!r} is not 0 or 1")
    n = len(grid)
    edges = []
    for j in range(width):
        ends = [i for i in range(n) if grid[i][j] == "1"]
        if len(ends) != 2:
            raise BadColumnError(j)
        edges.append((ends[0], ends[1]))
    return Graph(n, edges)


def write_incidence(g):
    """Inverse of parse_incidence: rows by newline, tokens by single space."""
    lines = []
    for i in range(g.n):
        row = ["0"] * g.m
        for j, (u, v) in enumerate(g.edges):
            if i in (u, v):
                row[j] = "1"
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def parse_edgelist(text):
    """Parse 'n m' header followed by m lines of 'u v'."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise EmptyInputError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise CountMismatchError("first line must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise CountMismatchError("first line must be 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise CountMismatchError(f"expected {m} edge lines, got {len(body)}")
    edges = []
    for ln in body:
        toks = ln.split()
        if len(toks) != 2:
            raise BadTokenError(f"edge line {ln!r} must be 'u v'")
        try:
            edges.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise BadTokenError(f"edge line {ln!r} must be 'u v'") from None
    return Graph(n, edges)


def write_edgelist(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g, highlight=None):
    """Undirected DOT document; highlighted edges bold, the rest dotted.

    With no highlight set, all edges are plain.
    """
    if highlight is not None:
        highlight = set(highlight)
        for e in highlight:
            if not 0 <= e < g.m:
                raise UnknownEdgeError(f"edge id {e} not in graph")
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for j, (u, v) in enumerate(g.edges):
        if highlight is None:
            lines.append(f"  {u} -- {v};")
        elif j in highlight:
            lines.append(f"  {u} -- {v} [style=bold];")
        else:
            lines.append(f"  {u} -- {v} [style=dotted];")
    lines.append("}")
    return "\n".join(lines) + "\n"
