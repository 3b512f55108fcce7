"""Spectator floor: the minimum spectator number over graphs having G as a minor.

The search never adds vertices or decontracts: some supergraph on the same
vertex set always attains the floor.  The floor is additive over connected
components, equals ``|T| - diam(T) - 1`` on trees, and is bounded below by
``|G| - diam(G) - 1`` (one more when ``usp(G) <= diam(G)``).

Only absent pairs are ever raised, and only to a single edge.  Deleting one
copy of a parallel pair never increases the spectator number, so any optimal
supergraph can drop back to the input's multiplicity on pairs already joined
and to 1 on new pairs.  :func:`spectator_floor_bruteforce` walks the full
capped raise space and serves as the independent check of that reduction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from .graph import (
    GraphError,
    MultiGraph,
    SizeGuardError,
    bfs_distances,
    component_vertex_sets,
    is_connected,
    is_tree,
)
from .parade import parade_number_bfs, scan_all

BRUTEFORCE_MAX_N = 7
MEMO_MIN_N = 8


@dataclass(frozen=True)
class FloorCertificate:
    uspcf: int
    witness: MultiGraph
    lower_bound_used: int
    nodes: int = 0


@dataclass
class FloorMemo:
    """Canonical-key -> floor map; safe to share between threads (inserts are idempotent)."""

    table: dict[bytes, int] = field(default_factory=dict)
    hits: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def value(self, g: MultiGraph) -> int:
        k = g.key
        v = self.table.get(k)
        if v is not None:
            self.hits += 1
            return v
        v = spectator_floor(g).uspcf
        with self._lock:
            self.table.setdefault(k, v)
        return v


def _check_cap(g: MultiGraph, max_mult: int) -> None:
    if max_mult not in (1, 2):
        raise ValueError("max_mult must be 1 (simple) or 2 (capped multigraph)")
    if max_mult == 1 and not g.is_simple:
        raise GraphError("max_mult=1 needs a simple input graph")


def floor_lower_bound(g: MultiGraph) -> int:
    """``|G| - diam(G) - 1``, plus one when ``usp(G) <= diam(G)``."""
    if not is_connected(g):
        raise GraphError("floor_lower_bound needs a connected graph; split components first")
    usp, diam = scan_all(g)
    return g.n - diam - 1 + (1 if usp <= diam else 0)


def _node_bound(n: int, usp: int, diam: int) -> int:
    return n - diam - 1 + (1 if usp <= diam else 0)


def _candidate_pairs(g: MultiGraph) -> list[tuple[int, int]]:
    dist = [bfs_distances(g, s) for s in range(g.n)]
    pairs = g.non_edges()
    # far pairs first: they shrink distances fastest
    pairs.sort(key=lambda p: (-dist[p[0]][p[1]], p))
    return pairs


class _Search:
    def __init__(self, comp: MultiGraph, memo: bool, trace):
        self.comp = comp
        self.use_memo = memo
        self.trace = trace
        usp, diam = scan_all(comp)
        self.root_bound = _node_bound(comp.n, usp, diam)
        self.best = comp.n - usp
        self.witness = comp
        self.nodes = 1
        self.cands = _candidate_pairs(comp)
        self.seen: set[bytes] = set()
        if trace is not None:
            trace.append((0, self.best))

    def done(self) -> bool:
        return self.best <= self.root_bound

    def _visit(self, h: MultiGraph, added: int) -> bool:
        """Score ``h``; return True when its subtree may still improve the incumbent."""
        self.nodes += 1
        usp, diam = scan_all(h)
        val = h.n - usp
        if self.trace is not None:
            self.trace.append((added, val))
        if val < self.best:
            self.best = val
            self.witness = h
        return _node_bound(h.n, usp, diam) < self.best

    def run(self) -> None:
        if self.done():
            return
        if self.use_memo:
            self.seen.add(self.comp.key)
            self._lattice(self.comp, 0)
        else:
            self._combinations(self.comp, 0, 0)

    def _combinations(self, h: MultiGraph, start: int, added: int) -> None:
        for j in range(start, len(self.cands)):
            if self.done():
                return
            u, v = self.cands[j]
            nxt = h.with_mult(u, v, 1)
            if self._visit(nxt, added + 1):
                self._combinations(nxt, j + 1, added + 1)

    def _lattice(self, h: MultiGraph, added: int) -> None:
        for u, v in self.cands:
            if self.done():
                return
            if h.mult[u][v]:
                continue
            nxt = h.with_mult(u, v, 1)
            k = nxt.key
            if k in self.seen:
                continue
            self.seen.add(k)
            if self._visit(nxt, added + 1):
                self._lattice(nxt, added + 1)


def _chain(n: int, parts: list[tuple[list[int], MultiGraph]]) -> MultiGraph:
    """Place component witnesses on the original labels and join their parades end to end."""
    rows = [[0] * n for _ in range(n)]
    prev_end = None
    for verts, w in parts:
        for i in range(w.n):
            for j in range(w.n):
                rows[verts[i]][verts[j]] = w.mult[i][j]
        p = parade_number_bfs(w).witness
        start, end = verts[p[0]], verts[p[-1]]
        if prev_end is not None:
            rows[prev_end][start] = rows[start][prev_end] = 1
        prev_end = end
    return MultiGraph(n, tuple(map(tuple, rows)))


def spectator_floor(
    g: MultiGraph,
    max_mult: int | None = None,
    *,
    use_tree_formula: bool = True,
    memo: bool | None = None,
    trace: list | None = None,
) -> FloorCertificate:
    """Exact spectator floor with a witness supergraph on the same vertex set.

    ``max_mult`` defaults to 1 for simple input and 2 otherwise.  Bridged
    component witnesses keep every component parade unique, so the returned
    witness is a single graph attaining the summed floor.

    ``trace`` (optional list) receives ``(edges_added, uspc)`` for every
    search node, one entry per connected non-tree component searched.
    """
    if max_mult is None:
        max_mult = 1 if g.is_simple else 2
    _check_cap(g, max_mult)
    total = 0
    bound_total = 0
    nodes = 0
    parts = []
    for verts in component_vertex_sets(g):
        comp = g.induced(verts)
        if comp.n == 1:
            parts.append((verts, comp))
            continue
        if use_tree_formula and is_tree(comp):
            usp, diam = scan_all(comp)
            value = comp.n - diam - 1
            total += value
            bound_total += value
            parts.append((verts, comp))
            continue
        use_memo = comp.n >= MEMO_MIN_N if memo is None else memo
        search = _Search(comp, use_memo, trace)
        search.run()
        total += search.best
        bound_total += search.root_bound
        nodes += search.nodes
        parts.append((verts, search.witness))
    witness = _chain(g.n, parts)
    return FloorCertificate(total, witness, bound_total, nodes)


def spectator_floor_value(g: MultiGraph, **kw) -> int:
    return spectator_floor(g, **kw).uspcf


def spectator_floor_bruteforce(
    g: MultiGraph, max_mult: int | None = None, *, limit: int = BRUTEFORCE_MAX_N
) -> int:
    """Unpruned minimum of the spectator number over every supergraph on the same vertices.

    Each pair ranges over every multiplicity from its current value up to the
    cap (``max_mult``; pairs already doubled stay doubled).
    """
    return bruteforce_certificate(g, max_mult, limit=limit)[0]


def bruteforce_certificate(
    g: MultiGraph, max_mult: int | None = None, *, limit: int = BRUTEFORCE_MAX_N
) -> tuple[int, MultiGraph]:
    from ._kernels import min_spectator_over_raises

    if max_mult is None:
        max_mult = 1 if g.is_simple else 2
    _check_cap(g, max_mult)
    if g.n > limit:
        raise SizeGuardError(
            "bruteforce-n",
            f"exhaustive supergraph sweep refused for n={g.n} > {limit}; pass limit= to override",
        )
    base = np.array(g.mult, dtype=np.int64)
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if g.mult[i][j] < max_mult]
    us = np.array([p[0] for p in pairs], dtype=np.int64)
    vs = np.array([p[1] for p in pairs], dtype=np.int64)
    lo = np.array([g.mult[i][j] for i, j in pairs], dtype=np.int64)
    hi = np.full(len(pairs), max_mult, dtype=np.int64)
    best, index = min_spectator_over_raises(base, us, vs, lo, hi)
    w = g
    for (i, j), low, high in zip(pairs, lo, hi):
        radix = int(high - low + 1)
        w = w.with_mult(i, j, int(low) + index % radix)
        index //= radix
    return int(best), w
