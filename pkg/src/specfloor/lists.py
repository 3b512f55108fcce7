"""Known minor-minimal lists for floors 0, 1, 2 and sweeps that reproduce them."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import census
from .floor import FloorMemo
from .graph import MultiGraph, disjoint_union
from .minimality import is_minor_minimal, minimal_graphs
from .named import complete, digon, name_of, named, star

# connected members of the complete lists
EXPECTED = {
    ("simple", 0): ("K1",),
    ("simple", 1): ("K3", "K1,3"),
    ("simple", 2): ("C4", "K1,4", "3-sun", "long Y"),
    ("multi", 0): ("K1",),
    ("multi", 1): ("C2", "K1,3"),
    ("multi", 2): ("C4", "H1", "H2", "H3", "H4", "H5", "K1,4", "long Y"),
}


def disconnected_members(mode: str) -> list[MultiGraph]:
    """The two-component members of the floor-2 list."""
    a = complete(3) if mode == "simple" else digon()
    b = star(3)
    return [disjoint_union(a, a), disjoint_union(a, b), disjoint_union(b, b)]


@dataclass
class ListReport:
    mode: str
    k: int
    max_n: int
    found: list[str]
    expected: list[str]
    excluded: list[str] = field(default_factory=list)
    unnamed: list[MultiGraph] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.unnamed and sorted(self.found) == sorted(self.expected)

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [
            f"{status} k={self.k} mode={self.mode} max_n={self.max_n}: "
            f"found {{{', '.join(self.found)}}} expected {{{', '.join(self.expected)}}}"
        ]
        if self.excluded:
            out.append(f"  excluded by the vertex bound: {', '.join(self.excluded)}")
        for g in self.unnamed:
            out.append(f"  unexpected minimal graph: {g}")
        return out


def verify_list(k: int, mode: str, max_n: int, memo: FloorMemo | None = None) -> ListReport:
    """Sweep connected graphs on <= max_n vertices for minor-minimal floor-k graphs."""
    memo = memo if memo is not None else FloorMemo()
    graphs = list(census.graphs_up_to(max_n, mode))
    found = minimal_graphs(graphs, k, mode == "simple", memo)
    names = [name_of(g) for g in found]
    expected = [x for x in EXPECTED[(mode, k)] if named(x).n <= max_n]
    excluded = [x for x in EXPECTED[(mode, k)] if named(x).n > max_n]
    return ListReport(
        mode,
        k,
        max_n,
        [x for x in names if x],
        expected,
        excluded,
        [g for g, x in zip(found, names) if not x],
    )


def verify_disconnected(mode: str, memo: FloorMemo | None = None) -> list[tuple[str, bool]]:
    memo = memo if memo is not None else FloorMemo()
    out = []
    for g in disconnected_members(mode):
        v = is_minor_minimal(g, mode == "simple", memo)
        out.append((name_of(g) or str(g), bool(v) and v.floor == 2))
    return out
