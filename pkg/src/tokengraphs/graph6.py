"""Bit-exact graph6 encoding and decoding.

Header: n+63 for n <= 62; '~' plus three 6-bit bytes for n <= 258047;
'~~' plus six 6-bit bytes beyond that. Edge bits walk the upper triangle
column by column: (0,1), (0,2), (1,2), (0,3), ... packed into 6-bit groups
(first bit is the most significant), each group offset by 63, zero-padded.
"""

from __future__ import annotations

from .errors import MalformedGraph6
from .graphs import Graph


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph6 cannot encode n = {n}")


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 line (no trailing newline)."""
    out = _encode_n(g.n)
    group = 0
    nbits = 0
    for j in range(1, g.n):
        col = g._adj[j]
        for i in range(j):
            group = (group << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return "".join(chr(b) for b in out)


def decode_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line; raises MalformedGraph6 with a byte offset."""
    if isinstance(text, bytes):
        data = text
    else:
        data = text.encode("ascii", "replace")
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise MalformedGraph6("empty input", 0)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b!r} outside graph6 range", i)

    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise MalformedGraph6("truncated 8-byte order field", len(data))
            n = 0
            for b in data[2:8]:
                n = (n << 6) | (b - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise MalformedGraph6("truncated 4-byte order field", len(data))
            n = 0
            for b in data[1:4]:
                n = (n << 6) | (b - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} edge bytes for n = {n}, got {len(data) - pos}",
            min(len(data), pos + nbytes),
        )

    adj = [0] * n
    i, j = 0, 1
    done = 0
    for off in range(nbytes):
        group = data[pos + off] - 63
        take = min(6, nbits - done)
        if take < 6 and group & ((1 << (6 - take)) - 1):
            raise MalformedGraph6("nonzero padding bits", pos + off)
        for t in range(take):
            if group >> (5 - t) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            i += 1
            if i == j:
                i = 0
                j += 1
        done += take
    return Graph._from_adj(adj)


def iter_graph6(text: str):
    """Yield graphs from a multi-line graph6 string, skipping blank lines."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield decode_graph6(line)
