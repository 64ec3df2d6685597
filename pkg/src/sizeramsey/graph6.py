"""graph6 encoding for graphs of order at most 62.

Only the one-byte size prefix ``N(n) = n + 63`` is needed below the order cap;
larger headers are rejected.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import Graph6Error
from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    n = g.order
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << 6 - nbits)))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside the graph6 range in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte size headers (order > 62) are not supported")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the cap of {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for order {n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & (1 << pad) - 1:
        raise Graph6Error("non-zero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, off = divmod(k, 6)
            if body[byte] >> 5 - off & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            graphs.append(decode_graph6(line))
    return graphs


def write_graph6_file(path, graphs: Iterable[Graph]) -> int:
    lines = [encode_graph6(g) for g in graphs]
    Path(path).write_text("".join(line + "\n" for line in lines))
    return len(lines)


def parse_graph_arg(arg: str) -> list[Graph]:
    """A graph6 string, or ``@path`` naming a file with one graph per line."""
    if arg.startswith("@"):
        return read_graph6_file(arg[1:])
    return [decode_graph6(arg)]
