"""Constructors for the small graphs that recur in the floor-0/1/2 classification."""

from __future__ import annotations

from .graph import GraphError, MultiGraph, disjoint_union


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> MultiGraph:
    """C_n; ``cycle(2)`` is the digon C_2 (a doubled edge)."""
    if n < 2:
        raise GraphError("cycles need at least two vertices")
    if n == 2:
        return digon()
    return MultiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def digon() -> MultiGraph:
    return MultiGraph.from_edges(2, [(0, 1), (0, 1)])


def star(s: int) -> MultiGraph:
    """K_{1,s} with centre 0."""
    return MultiGraph.from_edges(s + 1, [(0, i) for i in range(1, s + 1)])


def three_sun() -> MultiGraph:
    # triangle 1-2-4 with pendants 0 (at 1), 3 (at 2), 5 (at 4)
    return MultiGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)])


def long_y() -> MultiGraph:
    # three paths of length two from centre 0
    return MultiGraph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def h1() -> MultiGraph:
    """K_3 with every edge doubled."""
    return MultiGraph.from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])


def h2() -> MultiGraph:
    """K_{1,3} with two edges doubled."""
    return MultiGraph.from_edges(4, [(0, 1), (0, 1), (0, 2), (0, 2), (0, 3)])


def h3() -> MultiGraph:
    """One-sum of K_3 and C_2."""
    return MultiGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 3)])


def h4() -> MultiGraph:
    """The 3-sun with one triangle edge contracted."""
    return MultiGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 3), (3, 4)])


def h5() -> MultiGraph:
    """Claw whose third leaf carries a digon."""
    return MultiGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 4)])


NAMED = {
    "K1": lambda: complete(1),
    "P2": lambda: path(2),
    "C2": digon,
    "P3": lambda: path(3),
    "K3": lambda: complete(3),
    "P4": lambda: path(4),
    "C4": lambda: cycle(4),
    "K4": lambda: complete(4),
    "K1,3": lambda: star(3),
    "K1,4": lambda: star(4),
    "3-sun": three_sun,
    "long Y": long_y,
    "H1": h1,
    "H2": h2,
    "H3": h3,
    "H4": h4,
    "H5": h5,
}


def named(name: str) -> MultiGraph:
    return NAMED[name]()


def name_of(g: MultiGraph) -> str | None:
    """Name from :data:`NAMED` of a graph isomorphic to ``g`` (also ``A + B`` unions)."""
    key = g.key
    for name, make in NAMED.items():
        if make().key == key:
            return name
    from .graph import connected_components

    comps = connected_components(g)
    if len(comps) > 1:
        names = [name_of(c) for c in comps]
        if all(names):
            return " + ".join(sorted(names))
    return None


__all__ = [
    "NAMED",
    "complete",
    "cycle",
    "digon",
    "disjoint_union",
    "h1",
    "h2",
    "h3",
    "h4",
    "h5",
    "long_y",
    "name_of",
    "named",
    "path",
    "star",
    "three_sun",
]
