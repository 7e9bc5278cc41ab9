"""graph6 encoding of undirected graphs.

Bit layout: the upper triangle ``x(0,1) x(0,2) x(1,2) x(0,3) ...`` (column
major), packed six bits per byte big-endian, each byte biased by 63.  The
order prefix is one byte for ``n <= 62``, ``~`` plus three bytes for
``n <= 258047`` and ``~~`` plus six bytes above that.
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside printable range 63..126", base + pos)
    if not line:
        raise Graph6Error("missing order prefix", base)
    vals = [ord(ch) - 63 for ch in line]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte order prefix", base + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte order prefix", base + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}", base + pos + min(len(body), need)
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if n * (n - 1) // 2 % 6:
        pad = body[-1] & ((1 << (6 - n * (n - 1) // 2 % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    return Graph(n, tuple(rows))
