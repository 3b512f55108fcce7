"""Capped multigraphs and the three minor operations.

Vertices are ``0..n-1``.  Edge multiplicity between a pair is stored capped at
2, where 2 stands for "two or more parallel edges"; every parameter computed in
this package is unchanged once a pair carries more than two edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_MULT = 2


class GraphError(ValueError):
    """Invalid graph or violated operation precondition."""


class ContractionError(GraphError):
    """Contraction of an edge that is absent or has parallel copies."""


class SizeGuardError(RuntimeError):
    """An exponential computation was refused because the input is too large."""

    def __init__(self, guard: str, message: str):
        super().__init__(f"[{guard}] {message}")
        self.guard = guard


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MultiGraph:
    """Immutable loopless multigraph with multiplicities in {0, 1, 2}.

    ``mult`` is the full symmetric ``n x n`` multiplicity matrix as nested
    tuples.  Use :meth:`from_edges` or :meth:`from_pairs` rather than building
    the matrix by hand.
    """

    n: int
    mult: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graphs must have at least one vertex")
        if len(self.mult) != self.n or any(len(row) != self.n for row in self.mult):
            raise GraphError("multiplicity matrix has the wrong shape")
        for i in range(self.n):
            if self.mult[i][i] != 0:
                raise GraphError(f"loop at vertex {i}")
            for j in range(i + 1, self.n):
                m = self.mult[i][j]
                if m != self.mult[j][i]:
                    raise GraphError(f"asymmetric multiplicity at ({i}, {j})")
                if m not in (0, 1, 2):
                    raise GraphError(f"multiplicity {m} at ({i}, {j}) outside {{0, 1, 2}}")

    # construction ---------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "MultiGraph":
        return cls(n, tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_pairs(cls, n: int, pairs: dict[tuple[int, int], int] | Iterable[tuple[int, int, int]]):
        """Build from explicit ``(u, v) -> multiplicity`` data (values capped at 2)."""
        rows = [[0] * n for _ in range(n)]
        items = pairs.items() if isinstance(pairs, dict) else (((u, v), m) for u, v, m in pairs)
        for (u, v), m in items:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            m = min(MAX_MULT, m)
            rows[u][v] = rows[v][u] = m
        return cls(n, tuple(map(tuple, rows)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "MultiGraph":
        """Build from an edge list; repeated edges add multiplicity (capped at 2)."""
        rows = [[0] * n for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            m = min(MAX_MULT, rows[u][v] + 1)
            rows[u][v] = rows[v][u] = m
        return cls(n, tuple(map(tuple, rows)))

    # derived data -----------------------------------------------------------

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex (multiplicity >= 1)."""
        return tuple(sum(1 << j for j, m in enumerate(row) if m) for row in self.mult)

    @cached_property
    def adj2(self) -> tuple[int, ...]:
        """Bitmask of neighbours joined by a parallel pair."""
        return tuple(sum(1 << j for j, m in enumerate(row) if m == 2) for row in self.mult)

    @cached_property
    def is_simple(self) -> bool:
        return not any(self.adj2)

    @cached_property
    def num_edges(self) -> int:
        """Total edge count, parallel copies included (in capped form)."""
        return sum(self.mult[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    @cached_property
    def key(self) -> bytes:
        from .canon import canonical_key

        return canonical_key(self)

    def m(self, u: int, v: int) -> int:
        return self.mult[u][v]

    def degree(self, v: int) -> int:
        return sum(self.mult[v])

    def neighbors(self, v: int) -> list[int]:
        return [j for j, m in enumerate(self.mult[v]) if m]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, multiplicity)`` for every joined pair, ``u < v``."""
        for i in range(self.n):
            row = self.mult[i]
            for j in range(i + 1, self.n):
                if row[j]:
                    yield i, j, row[j]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with parallel copies repeated."""
        return [(u, v) for u, v, m in self.pairs() for _ in range(m)]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if not self.mult[i][j]]

    # simple transformations -------------------------------------------------

    def with_mult(self, u: int, v: int, m: int) -> "MultiGraph":
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows = [list(r) for r in self.mult]
        rows[u][v] = rows[v][u] = min(MAX_MULT, m)
        return MultiGraph(self.n, tuple(map(tuple, rows)))

    def add_edge(self, u: int, v: int) -> "MultiGraph":
        return self.with_mult(u, v, self.mult[u][v] + 1)

    def simplify(self) -> "MultiGraph":
        if self.is_simple:
            return self
        return MultiGraph(self.n, tuple(tuple(1 if m else 0 for m in row) for row in self.mult))

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[perm[i]][perm[j]] = self.mult[i][j]
        return MultiGraph(n, tuple(map(tuple, rows)))

    def induced(self, vertices: Sequence[int]) -> "MultiGraph":
        """Induced sub-multigraph, vertices renumbered in the given order."""
        return MultiGraph(
            len(vertices), tuple(tuple(self.mult[a][b] for b in vertices) for a in vertices)
        )

    def is_subgraph_of(self, other: "MultiGraph") -> bool:
        """Same vertex set and pointwise multiplicity <= ``other``."""
        return self.n == other.n and all(
            a <= b for ra, rb in zip(self.mult, other.mult) for a, b in zip(ra, rb)
        )

    def __str__(self) -> str:
        body = ", ".join(f"{u}-{v}" + ("x2" if m == 2 else "") for u, v, m in self.pairs())
        return f"MultiGraph(n={self.n}, [{body}])"


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    n = sum(g.n for g in graphs)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for g in graphs:
        for i in range(g.n):
            rows[off + i][off : off + g.n] = g.mult[i]
        off += g.n
    return MultiGraph(n, tuple(map(tuple, rows)))


def add_isolated_vertex(g: MultiGraph) -> MultiGraph:
    return disjoint_union(g, MultiGraph.empty(1))


# minor operations -----------------------------------------------------------


def delete_edge(g: MultiGraph, e: tuple[int, int]) -> MultiGraph:
    """Remove one copy of edge ``e``; a stored 2 becomes 1."""
    u, v = _pair(*e)
    if not (0 <= u < v < g.n) or g.mult[u][v] == 0:
        raise GraphError(f"no edge ({u}, {v}) to delete")
    return g.with_mult(u, v, g.mult[u][v] - 1)


def contract_edge(g: MultiGraph, e: tuple[int, int]) -> MultiGraph:
    """Contract a parallel-free edge.

    The merged vertex takes the smaller index and the larger endpoint is
    removed with order-preserving compaction of the remaining labels.
    """
    u, v = _pair(*e)
    if not (0 <= u < v < g.n):
        raise ContractionError(f"edge ({u}, {v}) out of range")
    if g.mult[u][v] != 1:
        raise ContractionError(
            f"edge ({u}, {v}) has multiplicity {g.mult[u][v]}; only single edges contract"
        )
    rows = [list(r) for r in g.mult]
    for w in range(g.n):
        if w not in (u, v):
            m = min(MAX_MULT, rows[u][w] + rows[v][w])
            rows[u][w] = rows[w][u] = m
    rows[u][v] = rows[v][u] = 0
    keep = [w for w in range(g.n) if w != v]
    return MultiGraph(len(keep), tuple(tuple(rows[a][b] for b in keep) for a in keep))


def delete_isolated_vertex(g: MultiGraph, v: int) -> MultiGraph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.adj[v]:
        raise GraphError(f"vertex {v} is not isolated")
    if g.n == 1:
        raise GraphError("deleting the only vertex would leave the empty graph")
    return g.induced([w for w in range(g.n) if w != v])


# connectivity and distances -------------------------------------------------


def component_vertex_sets(g: MultiGraph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = reach = 1 << s
        while reach:
            nxt = 0
            r = reach
            while r:
                low = r & -r
                nxt |= g.adj[low.bit_length() - 1]
                r ^= low
            reach = nxt & ~comp
            comp |= reach
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def connected_components(g: MultiGraph) -> list[MultiGraph]:
    return [g.induced(vs) for vs in component_vertex_sets(g)]


def is_connected(g: MultiGraph) -> bool:
    return len(component_vertex_sets(g)) == 1


def is_tree(g: MultiGraph) -> bool:
    return g.is_simple and g.num_edges == g.n - 1 and is_connected(g)


def bfs_distances(g: MultiGraph, s: int) -> list[int]:
    """Distances from ``s``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[s] = 0
    seen = 1 << s
    frontier = [s]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            new = g.adj[u] & ~seen
            seen |= new
            while new:
                low = new & -new
                w = low.bit_length() - 1
                dist[w] = d
                nxt.append(w)
                new ^= low
        frontier = nxt
    return dist


def diameter(g: MultiGraph) -> int:
    if not is_connected(g):
        raise GraphError("diameter is only defined here for connected graphs")
    return max(max(bfs_distances(g, s)) for s in range(g.n))
