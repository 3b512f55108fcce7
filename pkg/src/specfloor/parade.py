"""Parade number, spectator number and parade witnesses.

Two independent routes compute the parade number:

* :func:`parade_number_bfs` runs one breadth-first search per source with
  shortest-path counts saturated at 2 (edge multiplicities multiply in).
* :func:`parade_number_matrix` takes saturating powers of ``A + 2I``; an entry
  equal to 1 at power ``k`` marks a unique shortest walk of length ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import GraphError, MultiGraph, is_connected


@dataclass(frozen=True)
class ParadeCertificate:
    usp: int
    uspc: int
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class _SourceScan:
    dist: list[int]
    count: list[int]
    pred: list[int]


def _scan(g: MultiGraph, s: int) -> _SourceScan:
    """BFS from ``s`` with saturating path counts and unique predecessors."""
    n = g.n
    mult = g.mult
    adj = g.adj
    dist = [-1] * n
    count = [0] * n
    pred = [-1] * n
    dist[s] = 0
    count[s] = 1
    seen = 1 << s
    frontier = 1 << s
    d = 0
    while frontier:
        d += 1
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= adj[low.bit_length() - 1]
            f ^= low
        reach &= ~seen
        seen |= reach
        r = reach
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            dist[v] = d
            c = 0
            back = adj[v] & frontier
            row = mult[v]
            while back and c < 2:
                lb = back & -back
                u = lb.bit_length() - 1
                back ^= lb
                c += count[u] * row[u]
                pred[v] = u
            count[v] = min(c, 2)
        frontier = reach
    return _SourceScan(dist, count, pred)


def _path(scan: _SourceScan, s: int, v: int) -> tuple[int, ...]:
    out = [v]
    while v != s:
        v = scan.pred[v]
        out.append(v)
    return tuple(reversed(out))


def scan_all(g: MultiGraph) -> tuple[int, int]:
    """Return ``(usp, eccentricity_max)``; the second is the diameter when connected.

    For a disconnected graph the second value is the largest finite distance.
    """
    best = 0
    far = 0
    for s in range(g.n):
        sc = _scan(g, s)
        for v in range(s, g.n):
            d = sc.dist[v]
            if d > far:
                far = d
            if sc.count[v] == 1 and d > best:
                best = d
    return best + 1, far


def parade_number_bfs(g: MultiGraph) -> ParadeCertificate:
    """Parade number with a witness path; works for disconnected graphs.

    Ties between longest unique shortest paths go to the smallest
    ``(start, end)`` pair with ``start < end``.
    """
    best = (0, 0, 0)
    best_scan = None
    for s in range(g.n):
        sc = _scan(g, s)
        for v in range(s + 1, g.n):
            if sc.count[v] == 1 and sc.dist[v] > best[0]:
                best = (sc.dist[v], s, v)
                best_scan = sc
    d, s, v = best
    witness = (0,) if best_scan is None else _path(best_scan, s, v)
    return ParadeCertificate(d + 1, g.n - d - 1, witness)


def unique_shortest_paths(g: MultiGraph, min_order: int = 1) -> list[tuple[int, ...]]:
    """All unique shortest paths of order >= ``min_order``, each listed once (start < end)."""
    out = []
    if min_order <= 1:
        out += [(v,) for v in range(g.n)]
    for s in range(g.n):
        sc = _scan(g, s)
        for v in range(s + 1, g.n):
            if sc.count[v] == 1 and sc.dist[v] + 1 >= min_order:
                out.append(_path(sc, s, v))
    return out


def all_parades(g: MultiGraph) -> list[tuple[int, ...]]:
    """Every parade of ``g`` (longest unique shortest paths), start < end."""
    usp = parade_number_bfs(g).usp
    return [p for p in unique_shortest_paths(g, usp) if len(p) == usp]


def spectator_number(g: MultiGraph) -> int:
    return parade_number_bfs(g).uspc


def is_unique_shortest_path(g: MultiGraph, path: tuple[int, ...]) -> bool:
    """Recheck a claimed unique shortest path from scratch."""
    if not path or len(set(path)) != len(path):
        return False
    if any(g.mult[a][b] != 1 for a, b in zip(path, path[1:])):
        return False
    sc = _scan(g, path[0])
    end = path[-1]
    return sc.dist[end] == len(path) - 1 and sc.count[end] == 1


# matrix route ---------------------------------------------------------------


class SaturatingCountMatrix:
    """Square matrix over the counting semiring truncated to {0, 1, 2+}.

    ``min(x, 2)`` commutes with both + and * on the naturals, so saturating
    after each product gives exactly ``min(exact, 2)`` entrywise.
    """

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray):
        self.data = np.minimum(np.asarray(data, dtype=np.int64), 2)

    @classmethod
    def identity(cls, n: int) -> "SaturatingCountMatrix":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def shifted_adjacency(cls, g: MultiGraph) -> "SaturatingCountMatrix":
        """``A + 2I`` with capped multiplicities as entries of ``A``."""
        a = np.array(g.mult, dtype=np.int64)
        return cls(a + 2 * np.eye(g.n, dtype=np.int64))

    def __matmul__(self, other: "SaturatingCountMatrix") -> "SaturatingCountMatrix":
        return SaturatingCountMatrix(self.data @ other.data)

    def has_one(self) -> bool:
        return bool((self.data == 1).any())

    def all_above_one(self) -> bool:
        return bool((self.data > 1).all())


def parade_number_matrix(g: MultiGraph) -> ParadeCertificate:
    """Parade number from saturating powers of ``A + 2I`` (no witness)."""
    if not is_connected(g):
        raise GraphError("matrix parade number needs a connected graph; split components first")
    b = SaturatingCountMatrix.shifted_adjacency(g)
    power = SaturatingCountMatrix.identity(g.n)
    best = 0
    for k in range(1, g.n):
        power = power @ b
        if power.has_one():
            best = k
        if power.all_above_one():
            break
    return ParadeCertificate(best + 1, g.n - best - 1, None)
