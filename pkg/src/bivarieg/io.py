"""Graph serialization: graph6 and plain edge-list text.

graph6 is the standard ASCII encoding of simple undirected graphs (6 bits per
character, offset 63, upper triangle column-major).  The edge-list format is
a "p q" header line followed by q lines "u v" with 0-based vertices.
"""

from __future__ import annotations

from .errors import InputError
from .graph import Graph, from_edge_list


def _g6_size_bytes(n: int) -> list[int]:
    if n < 0:
        raise InputError("graph6 order must be non-negative")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise InputError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    out = _g6_size_bytes(g.n)
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return "".join(chr(c) for c in out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise InputError(f"invalid graph6 character in {s!r}")
    if not data:
        raise InputError("empty graph6 string")
    if data[0] == 63:  # 126 - 63
        if len(data) >= 2 and data[1] == 63:
            n = 0
            for d in data[2:8]:
                n = (n << 6) | d
            data = data[8:]
        else:
            n = 0
            for d in data[1:4]:
                n = (n << 6) | d
            data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise InputError(f"graph6 body length {len(data)}, expected {need} for n={n}")
    bits = []
    for d in data:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append((d >> s6) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    tokens_by_line = [ln.split() for ln in text.splitlines() if ln.split()]
    if not tokens_by_line:
        raise InputError("empty edge-list input")
    head = tokens_by_line[0]
    if len(head) != 2:
        raise InputError('edge-list header must be "p q"')
    try:
        n, q = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError(f"bad edge-list header {head!r}") from exc
    body = tokens_by_line[1:]
    if len(body) != q:
        raise InputError(f"edge-list declares {q} edges, found {len(body)} lines")
    pairs = []
    for toks in body:
        if len(toks) != 2:
            raise InputError(f"bad edge line {toks!r}")
        try:
            pairs.append((int(toks[0]), int(toks[1])))
        except ValueError as exc:
            raise InputError(f"bad edge line {toks!r}") from exc
    return from_edge_list(n, pairs)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse either format; "auto" sniffs for a leading "p q" integer header."""
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edge_list_text(text)
    if fmt != "auto":
        raise InputError(f"unknown format {fmt!r}")
    first = text.strip().splitlines()[0].split() if text.strip() else []
    if len(first) == 2:
        try:
            int(first[0]), int(first[1])
            return from_edge_list_text(text)
        except ValueError:
            pass
    return from_graph6(text)
