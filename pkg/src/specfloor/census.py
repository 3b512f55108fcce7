"""Small-graph censuses by vertex augmentation with canonical-key rejection.

Every connected graph on n vertices arises from a connected graph on n - 1
vertices by adding a vertex joined to a nonempty subset (delete a leaf of a
spanning tree), and every graph arises from some graph on n - 1 vertices by
adding a vertex joined to any subset.  Multigraph censuses double subsets of
the edges of each simple skeleton.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import MultiGraph

# connected graphs on 1..10 vertices (OEIS A001349)
CONNECTED_COUNTS = dict(enumerate((1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571), start=1))
# free trees on 1..10 vertices (OEIS A000055)
TREE_COUNTS = dict(enumerate((1, 1, 1, 2, 3, 6, 11, 23, 47, 106), start=1))


def _extend(g: MultiGraph, mask: int) -> MultiGraph:
    n = g.n
    rows = [list(r) + [1 if mask >> i & 1 else 0] for i, r in enumerate(g.mult)]
    rows.append([1 if mask >> i & 1 else 0 for i in range(n)] + [0])
    return MultiGraph(n + 1, tuple(map(tuple, rows)))


def _sorted(graphs: dict[bytes, MultiGraph]) -> tuple[MultiGraph, ...]:
    return tuple(graphs[k] for k in sorted(graphs, key=lambda k: (graphs[k].num_edges, k)))


def _canonical(g: MultiGraph) -> MultiGraph:
    from .canon import canonical_graph

    return canonical_graph(g)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[MultiGraph, ...]:
    """One canonical representative per connected simple graph on n vertices."""
    if n == 1:
        return (MultiGraph.empty(1),)
    out: dict[bytes, MultiGraph] = {}
    for g in connected_graphs(n - 1):
        for mask in range(1, 1 << g.n):
            h = _extend(g, mask)
            out.setdefault(h.key, h)
    return _sorted({k: _canonical(h) for k, h in out.items()})


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[MultiGraph, ...]:
    """Every simple graph on n vertices, connected or not."""
    if n == 1:
        return (MultiGraph.empty(1),)
    out: dict[bytes, MultiGraph] = {}
    for g in all_graphs(n - 1):
        for mask in range(1 << g.n):
            h = _extend(g, mask)
            out.setdefault(h.key, h)
    return _sorted({k: _canonical(h) for k, h in out.items()})


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[MultiGraph, ...]:
    if n == 1:
        return (MultiGraph.empty(1),)
    out: dict[bytes, MultiGraph] = {}
    for t in trees(n - 1):
        for v in range(t.n):
            h = _extend(t, 1 << v)
            out.setdefault(h.key, h)
    return _sorted({k: _canonical(h) for k, h in out.items()})


def _doublings(skeletons) -> tuple[MultiGraph, ...]:
    out: dict[bytes, MultiGraph] = {}
    for s in skeletons:
        edges = [(u, v) for u, v, _ in s.pairs()]
        for r in range(len(edges) + 1):
            for chosen in combinations(edges, r):
                h = MultiGraph.from_pairs(s.n, {e: (2 if e in chosen else 1) for e in edges})
                out.setdefault(h.key, h)
    return _sorted({k: _canonical(h) for k, h in out.items()})


@lru_cache(maxsize=None)
def connected_multigraphs(n: int) -> tuple[MultiGraph, ...]:
    """Connected multigraphs on n vertices with multiplicities in {1, 2}."""
    return _doublings(connected_graphs(n))


@lru_cache(maxsize=None)
def all_multigraphs(n: int) -> tuple[MultiGraph, ...]:
    return _doublings(all_graphs(n))


def graphs_up_to(max_n: int, mode: str = "simple", connected: bool = True):
    """Iterate a census for n = 1..max_n in (n, edges, key) order."""
    if mode not in ("simple", "multi"):
        raise ValueError("mode must be 'simple' or 'multi'")
    for n in range(1, max_n + 1):
        if mode == "simple":
            yield from connected_graphs(n) if connected else all_graphs(n)
        else:
            yield from connected_multigraphs(n) if connected else all_multigraphs(n)
