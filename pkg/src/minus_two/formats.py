"""graph6, DOT and JSON encodings of :class:`~minus_two.graph.Graph`.

Only the short graph6 form is supported: one header byte ``n + 63``, so
``n <= 62``. The upper triangle is read column by column, entry ``(i, j)``
for ``j = 1..n-1`` and ``i = 0..j-1``, packed six bits per byte with the
most significant bit first and every byte offset by 63.
"""

from __future__ import annotations

from .errors import DomainError, Graph6Error
from .graph import Graph

MAX_GRAPH6_N = 62


def write_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise DomainError(f"graph6 short form supports n <= {MAX_GRAPH6_N}, got {g.n}")
    bits = [(g.rows[j] >> i) & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (a trailing newline is tolerated)."""
    s = text.rstrip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        offset = len(">>graph6<<")
    else:
        offset = 0
    if not s:
        raise Graph6Error("empty graph6 string", offset)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", offset + k)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_N:
        raise Graph6Error("long-form header (n > 62) is not supported", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(s) - 1}",
                          offset + min(len(s), 1 + nbytes))
    bits = []
    for ch in s[1:]:
        v = ord(ch) - 63
        bits.extend((v >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", offset + len(s) - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(tuple(rows))


def to_dot(g: Graph, labels=None) -> str:
    """Undirected DOT text, edges in lexicographic order."""
    name = (lambda v: str(v)) if labels is None else (lambda v: str(labels[v]))
    lines = ["graph {"]
    lines += [f"  {name(v)};" for v in range(g.n)]
    lines += [f"  {name(i)} -- {name(j)};" for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.n <= MAX_GRAPH6_N:
        out["graph6"] = write_graph6(g)
    return out


def graph_from_json(obj: dict) -> Graph:
    return Graph(obj["n"], [tuple(e) for e in obj["edges"]])
