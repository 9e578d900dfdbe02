"""Graph interchange: edge-list text, graph6, and content hashes.

Edge-list files: optional '#' comments, an optional "p <n> <m>" header (n
implies vertices 0..n-1, covering isolated ones), then one "u v" pair per
line.  Writing a graph whose identifiers are not 0..n-1 adds a
"# vertices: ..." comment that the reader honours, so graphs that lost
vertices round-trip without renumbering.
"""

from __future__ import annotations

import hashlib

from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    vertices: set[int] = set()
    edges: list[tuple[int, int]] = []
    header_n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("vertices:"):
                try:
                    vertices.update(int(tok) for tok in body[len("vertices:"):].split())
                except ValueError:
                    raise ValueError(f"line {lineno}: bad vertex list") from None
            continue
        parts = line.split()
        if parts[0] == "p":
            if header_n is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: header needs 'p <n> <m>'")
            try:
                header_n = int(parts[1])
                int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer header field") from None
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer endpoint") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative identifier")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        vertices.update((u, v))
    if header_n is not None and not vertices - set(range(header_n)):
        vertices.update(range(header_n))
    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    if g.vertices != tuple(range(g.n)):
        lines.append("# vertices: " + " ".join(str(v) for v in g.vertices))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_hash(g: Graph) -> str:
    """Content hash of the canonical edge-list serialization."""
    return "sha256:" + hashlib.sha256(format_edge_list(g).encode()).hexdigest()


# ---------------------------------------------------------------------------
# graph6


def _g6_size_bytes(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)])
    raise ValueError("vertex count too large for graph6")


def graph6_encode(g: Graph) -> str:
    """Standard graph6 line.  Identifiers are mapped to 0..n-1 by rank."""
    rank = {v: i for i, v in enumerate(g.vertices)}
    n = g.n
    adj = set()
    for u, v in g.edges():
        a, b = rank[u], rank[v]
        adj.add((min(a, b), max(a, b)))
    out = []
    pos = 0
    cur = 0
    for j in range(1, n):
        for i in range(j):
            cur = (cur << 1) | ((i, j) in adj)
            pos += 1
            if pos == 6:
                out.append(cur + 63)
                pos = cur = 0
    if pos:
        out.append((cur << (6 - pos)) + 63)
    return (_g6_size_bytes(n) + bytes(out)).decode("ascii")


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 line into a graph on vertices 0..n-1."""
    data = text.strip().encode("ascii")
    if not data:
        raise ValueError("empty graph6 string")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if data[0] == 126:
        if len(data) > 1 and data[1] == 126:
            n = 0
            for byte in data[2:8]:
                n = (n << 6) | (byte - 63)
            body = data[8:]
        else:
            n = 0
            for byte in data[1:4]:
                n = (n << 6) | (byte - 63)
            body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} groups, expected {need}")
    bits = []
    for byte in body:
        val = byte - 63
        if not 0 <= val <= 63:
            raise ValueError("invalid graph6 character")
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(range(n), edges)
