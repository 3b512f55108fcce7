"""Elementary minors, minor-minimality for the spectator floor, and minor containment."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .floor import FloorMemo
from .graph import (
    GraphError,
    MultiGraph,
    SizeGuardError,
    bfs_distances,
    component_vertex_sets,
    contract_edge,
    delete_edge,
    delete_isolated_vertex,
    diameter,
    is_tree,
)

CONTAINS_MINOR_MAX_N = 10


@dataclass(frozen=True)
class MinorStep:
    kind: str  # "delete_edge" | "contract_edge" | "delete_isolated_vertex"
    target: tuple[int, int] | int

    def apply(self, g: MultiGraph, simple_mode: bool = False) -> MultiGraph:
        if self.kind == "delete_edge":
            return delete_edge(g, self.target)
        if self.kind == "contract_edge":
            h = contract_edge(g, self.target)
            return h.simplify() if simple_mode else h
        if self.kind == "delete_isolated_vertex":
            return delete_isolated_vertex(g, self.target)
        raise ValueError(f"unknown minor step {self.kind!r}")


def elementary_minors(g: MultiGraph, simple_mode: bool = False) -> list[tuple[MinorStep, MultiGraph]]:
    """All elementary minors of ``g`` up to isomorphism, first-found step kept.

    In ``simple_mode`` contraction results are simplified, so every minor of a
    simple graph is simple.  Minors that would be empty are never produced.
    """
    if simple_mode and not g.is_simple:
        raise GraphError("simple_mode needs a simple graph")
    steps: list[MinorStep] = []
    for u, v, m in g.pairs():
        steps.append(MinorStep("delete_edge", (u, v)))
    for u, v, m in g.pairs():
        if m == 1:
            steps.append(MinorStep("contract_edge", (u, v)))
    if g.n > 1:
        steps += [MinorStep("delete_isolated_vertex", v) for v in range(g.n) if not g.adj[v]]
    seen: set[bytes] = set()
    out = []
    for step in steps:
        h = step.apply(g, simple_mode)
        if h.key not in seen:
            seen.add(h.key)
            out.append((step, h))
    return out


@dataclass(frozen=True)
class MinimalityVerdict:
    minimal: bool
    floor: int
    step: MinorStep | None = None
    minor: MultiGraph | None = None
    minor_floor: int | None = None

    def __bool__(self) -> bool:
        return self.minimal


def is_minor_minimal(
    g: MultiGraph,
    simple_mode: bool = False,
    memo: FloorMemo | None = None,
    floor_of: Callable[[MultiGraph], int] | None = None,
) -> MinimalityVerdict:
    """True iff no elementary minor has the same spectator floor.

    The floor is minor-monotone, so checking depth one suffices.  ``K_1`` has
    no nonempty proper minor and is reported minimal (floor 0).
    """
    if floor_of is None:
        memo = memo if memo is not None else FloorMemo()
        floor_of = memo.value
    k = floor_of(g)
    for step, h in elementary_minors(g, simple_mode):
        fh = floor_of(h)
        if fh == k:
            return MinimalityVerdict(False, k, step, h, fh)
    return MinimalityVerdict(True, k)


def _tree_path(t: MultiGraph, a: int, b: int) -> list[int]:
    dist = bfs_distances(t, b)
    out = [a]
    while out[-1] != b:
        x = out[-1]
        out.append(next(w for w in t.neighbors(x) if dist[w] == dist[x] - 1))
    return out


def diametric_edge_core(t: MultiGraph) -> set[tuple[int, int]]:
    """Edges lying on every diametric path of a tree."""
    if not is_tree(t):
        raise GraphError("diametric_edge_core needs a simple tree")
    d = diameter(t)
    core = None
    for a in range(t.n):
        dist = bfs_distances(t, a)
        for b in range(a + 1, t.n):
            if dist[b] == d:
                p = _tree_path(t, a, b)
                edges = {(min(x, y), max(x, y)) for x, y in zip(p, p[1:])}
                core = edges if core is None else core & edges
    return core or set()


def is_minor_minimal_tree(t: MultiGraph) -> bool:
    """A tree is minimal iff no edge lies on all its diametric paths."""
    return not diametric_edge_core(t)


def classify_floor_zero(g: MultiGraph) -> bool:
    """Floor 0 exactly for disjoint unions of simple paths."""
    for verts in component_vertex_sets(g):
        c = g.induced(verts)
        if not c.is_simple or c.num_edges != c.n - 1:
            return False
        if any(c.degree(v) > 2 for v in range(c.n)):
            return False
    return True


# minor containment ----------------------------------------------------------


def _connected_subsets(g: MultiGraph) -> list[int]:
    out = []
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        comp = reach = low
        while reach:
            nxt = 0
            r = reach
            while r:
                b = r & -r
                nxt |= g.adj[b.bit_length() - 1]
                r ^= b
            reach = nxt & mask & ~comp
            comp |= reach
        if comp == mask:
            out.append(mask)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return out


def _between(g: MultiGraph, a: int, b: int) -> int:
    total = 0
    x = a
    while x:
        low = x & -x
        u = low.bit_length() - 1
        x ^= low
        row = g.mult[u]
        y = b & g.adj[u]
        while y:
            lb = y & -y
            total += row[lb.bit_length() - 1]
            y ^= lb
    return total


def contains_minor(host: MultiGraph, pattern: MultiGraph, *, limit: int = CONTAINS_MINOR_MAX_N) -> bool:
    """Brute-force minor test via disjoint connected branch sets.

    A pattern pair of multiplicity 2 needs at least two host edges between
    the corresponding branch sets.
    """
    if host.n > limit:
        raise SizeGuardError("contains-minor-n", f"host has {host.n} > {limit} vertices")
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False
    subsets = _connected_subsets(host)
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    chosen: list[int] = []

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        for s in subsets:
            if s & used:
                continue
            ok = True
            for j in range(i):
                need = pattern.mult[p][order[j]]
                if need and _between(host, s, chosen[j]) < need:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(s)
            if place(i + 1, used | s):
                return True
            chosen.pop()
        return False

    return place(0, 0)


def minimal_graphs(graphs, floor_value: int, simple_mode: bool, memo: FloorMemo | None = None):
    """Filter ``graphs`` to the minor-minimal ones with the given floor."""
    memo = memo if memo is not None else FloorMemo()
    out = []
    for g in graphs:
        if memo.value(g) != floor_value:
            continue
        if is_minor_minimal(g, simple_mode, memo):
            out.append(g)
    return out


__all__ = [
    "MinimalityVerdict",
    "MinorStep",
    "classify_floor_zero",
    "contains_minor",
    "diametric_edge_core",
    "elementary_minors",
    "is_minor_minimal",
    "is_minor_minimal_tree",
    "minimal_graphs",
]
