"""graph6, sparse6 and edge-list text formats.

graph6 and sparse6 follow McKay's definitions bit for bit (sparse6 uses
``k`` = number of bits in ``n - 1``).  Inputs with more than two parallel
edges on a pair are capped to 2 with a :class:`CappedMultiplicityWarning`.
"""

from __future__ import annotations

import warnings
from typing import Iterator

from .graph import MAX_MULT, GraphError, MultiGraph

FORMATS = ("graph6", "sparse6", "edges")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class FormatError(ValueError):
    """The graph cannot be written in the requested format."""


class CappedMultiplicityWarning(UserWarning):
    pass


# shared size header -------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _check_chars(s: str, start: int) -> list[int]:
    vals = []
    for i, ch in enumerate(s[start:], start):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"invalid character {ch!r}", i)
        vals.append(c - 63)
    return vals


def _decode_n(s: str, pos: int) -> tuple[int, int]:
    if pos >= len(s):
        raise ParseError("missing vertex count", pos)
    if s[pos] != "~":
        return _check_chars(s[pos : pos + 1], 0)[0], pos + 1
    if s[pos + 1 : pos + 2] == "~":
        width, start = 6, pos + 2
    else:
        width, start = 3, pos + 1
    if len(s) < start + width:
        raise ParseError("truncated vertex count", len(s))
    n = 0
    for i, v in enumerate(_check_chars(s[start : start + width], 0)):
        if v < 0 or v > 63:
            raise ParseError("invalid vertex count byte", start + i)
        n = (n << 6) | v
    return n, start + width


def _pack(bits: list[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        v = 0
        for b in chunk:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def _unpack(vals: list[int]) -> list[int]:
    return [(v >> (5 - i)) & 1 for v in vals for i in range(6)]


# graph6 -------------------------------------------------------------------


def to_graph6(g: MultiGraph) -> str:
    if not g.is_simple:
        raise FormatError("graph6 encodes simple graphs only; use sparse6 or edges")
    bits = [1 if g.mult[i][j] else 0 for j in range(1, g.n) for i in range(j)]
    return _encode_n(g.n) + _pack(bits)


def from_graph6(text: str) -> MultiGraph:
    s = text.strip()
    off = 0
    if s.startswith(">>graph6<<"):
        off = len(">>graph6<<")
    n, pos = _decode_n(s, off)
    if n < 1:
        raise ParseError("graphs must have at least one vertex", off)
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} data bytes, found {len(body)}", pos + min(len(body), nbytes))
    bits = _unpack(_check_chars(s, pos))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[need:]):
        raise ParseError("nonzero padding bits", len(s) - 1)
    return MultiGraph.from_edges(n, edges)


# sparse6 ------------------------------------------------------------------


def _bits_for(n: int) -> int:
    k = 0
    while (1 << k) < n:
        k += 1
    return k


def to_sparse6(g: MultiGraph) -> str:
    n = g.n
    k = _bits_for(n)

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    bits: list[int] = []
    cur = 0
    for v in range(n):
        for u in range(v + 1):
            for _ in range(g.mult[u][v] if u != v else 0):
                if v == cur:
                    bits += [0] + enc(u)
                elif v == cur + 1:
                    cur = v
                    bits += [1] + enc(u)
                else:
                    cur = v
                    bits += [1] + enc(v) + [0] + enc(u)
    pad = (-len(bits)) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        bits.append(0)
        pad = (-len(bits)) % 6
    bits += [1] * pad
    return ":" + _encode_n(n) + _pack(bits)


def from_sparse6(text: str) -> MultiGraph:
    s = text.strip()
    off = 0
    if s.startswith(">>sparse6<<"):
        off = len(">>sparse6<<")
    if s[off : off + 1] != ":":
        raise ParseError("sparse6 strings start with ':'", off)
    n, pos = _decode_n(s, off + 1)
    if n < 1:
        raise ParseError("graphs must have at least one vertex", off + 1)
    k = _bits_for(n)
    bits = _unpack(_check_chars(s, pos))
    counts: dict[tuple[int, int], int] = {}
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in range(k):
            x = (x << 1) | bits[i + 1 + t]
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x == v:
            raise ParseError(f"loop at vertex {v}", pos + (i - 1) // 6)
        else:
            counts[(x, v)] = counts.get((x, v), 0) + 1
    return _from_counts(n, counts)


def _from_counts(n: int, counts: dict[tuple[int, int], int]) -> MultiGraph:
    over = sorted(p for p, c in counts.items() if c > MAX_MULT)
    if over:
        warnings.warn(
            f"multiplicities above {MAX_MULT} capped on pairs {over}",
            CappedMultiplicityWarning,
            stacklevel=3,
        )
    return MultiGraph.from_pairs(n, counts)


# edge list ----------------------------------------------------------------


def to_edge_list(g: MultiGraph) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> MultiGraph:
    """Parse ``u v`` lines; repeats add multiplicity, ``#`` starts a comment.

    An optional first line ``n=<count>`` declares the vertex count (needed for
    trailing isolated vertices); otherwise n is one more than the largest index.
    """
    n = None
    counts: dict[tuple[int, int], int] = {}
    top = -1
    offset = 0
    seen_content = False
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        start = offset
        offset += len(line.encode("utf-8"))
        if not body:
            continue
        if body.startswith("n="):
            if seen_content:
                raise ParseError("'n=' must be the first line", start)
            try:
                n = int(body[2:])
            except ValueError:
                raise ParseError(f"bad vertex count {body!r}", start) from None
            seen_content = True
            continue
        seen_content = True
        parts = body.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {body!r}", start)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {body!r}", start) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex index", start)
        if u == v:
            raise ParseError(f"loop at vertex {u}", start)
        key = (u, v) if u < v else (v, u)
        counts[key] = counts.get(key, 0) + 1
        top = max(top, u, v)
    if n is None:
        n = max(top + 1, 1)
    if n < 1:
        raise ParseError("graphs must have at least one vertex", 0)
    if top >= n:
        raise ParseError(f"vertex {top} exceeds declared n={n}", 0)
    return _from_counts(n, counts)


# dispatch -----------------------------------------------------------------


def parse_graph(text: str, fmt: str) -> MultiGraph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "sparse6":
        return from_sparse6(text)
    if fmt == "edges":
        return from_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def serialize_graph(g: MultiGraph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "sparse6":
        return to_sparse6(g)
    if fmt == "edges":
        return to_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def encode(g: MultiGraph) -> str:
    """Compact single-line encoding: graph6 when simple, sparse6 otherwise."""
    return to_graph6(g) if g.is_simple else to_sparse6(g)


def decode(s: str) -> MultiGraph:
    s = s.strip()
    return from_sparse6(s) if s.startswith(":") or s.startswith(">>sparse6<<") else from_graph6(s)


def detect_format(text: str) -> str:
    for line in text.splitlines():
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        if body.startswith(":") or body.startswith(">>sparse6<<"):
            return "sparse6"
        if body.startswith(">>graph6<<"):
            return "graph6"
        if " " in body or "\t" in body or body.startswith("n="):
            return "edges"
        if all(63 <= ord(c) <= 126 for c in body):
            return "graph6"
        return "edges"
    return "edges"


def read_graphs(text: str, fmt: str = "auto") -> Iterator[MultiGraph]:
    """Graph6/sparse6 text holds one graph per line (mixed in auto mode); an edge list holds one graph."""
    if fmt == "auto" and detect_format(text) == "edges":
        fmt = "edges"
    if fmt == "edges":
        yield from_edge_list(text)
        return
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            try:
                yield decode(line) if fmt == "auto" else parse_graph(line, fmt)
            except GraphError as exc:
                raise ParseError(str(exc), 0) from exc
