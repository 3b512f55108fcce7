"""Saturated crowded parades: the minor-maximal graphs for a fixed vertex count and edge cap.

A crowded p-parade (p >= 2) has a parade ``v_1 .. v_p`` and, for each
``i``, a clique of ``m_i`` outside vertices joined to ``v_i`` and
``v_{i+1}`` and to the neighbouring cliques ``i - 1`` and ``i + 1``.  In the
m-saturated version every edge off the parade has m parallel copies (stored
as ``min(m, 2)``).  The m-saturated crowded 1-parade joins every pair by m
edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .floor import FloorMemo
from .graph import MAX_MULT, GraphError, MultiGraph, SizeGuardError
from .parade import all_parades

VERIFY_MAX_N = 8


@dataclass(frozen=True)
class CrowdedParadeSpec:
    p: int
    m: int
    clique_sizes: tuple[int, ...] = ()
    n_total: int | None = None  # only for p == 1

    def __post_init__(self):
        if self.p < 1 or self.m < 1:
            raise GraphError("crowded parades need p >= 1 and m >= 1")
        if self.p == 1:
            if self.m < 2:
                raise GraphError("a saturated crowded 1-parade needs m >= 2")
            if self.clique_sizes or self.n_total is None or self.n_total < 1:
                raise GraphError("p = 1 takes a vertex count n_total and no clique sizes")
        else:
            if len(self.clique_sizes) != self.p - 1:
                raise GraphError(f"p = {self.p} needs {self.p - 1} clique sizes")
            if any(s < 0 for s in self.clique_sizes):
                raise GraphError("clique sizes must be nonnegative")
            if self.n_total is not None and self.n_total != self.n:
                raise GraphError("n_total disagrees with p + sum(clique_sizes)")

    @property
    def n(self) -> int:
        if self.p == 1:
            return self.n_total  # type: ignore[return-value]
        return self.p + sum(self.clique_sizes)

    @property
    def floor(self) -> int:
        return self.n - self.p

    def canonical(self) -> "CrowdedParadeSpec":
        """Orientation-normalised copy (clique sizes vs their reversal, smaller first)."""
        if self.p == 1:
            return self
        return CrowdedParadeSpec(self.p, self.m, min(self.clique_sizes, self.clique_sizes[::-1]))

    def __str__(self) -> str:
        if self.p == 1:
            return f"1,{self.m},[{self.n}]"
        return f"{self.p},{self.m},[{','.join(map(str, self.clique_sizes))}]"


def parse_spec(text: str) -> CrowdedParadeSpec:
    """Parse ``p,m,[m1,...]``; for ``p = 1`` the bracket holds the vertex count."""
    mt = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*\[?([\d,\s]*)\]?)?\s*", text)
    if not mt:
        raise ValueError(f"bad crowded-parade spec {text!r}; expected p,m,[m1,...]")
    p, m = int(mt.group(1)), int(mt.group(2))
    rest = [int(x) for x in (mt.group(3) or "").replace(" ", "").split(",") if x]
    if p == 1:
        if len(rest) != 1:
            raise ValueError("p = 1 spec needs the vertex count: 1,m,[n]")
        return CrowdedParadeSpec(1, m, (), rest[0])
    return CrowdedParadeSpec(p, m, tuple(rest))


def build_crowded_parade(spec: CrowdedParadeSpec) -> MultiGraph:
    """Parade on vertices ``0..p-1``; clique ``i`` follows in order of ``i``."""
    w = min(spec.m, MAX_MULT)
    if spec.p == 1:
        n = spec.n
        return MultiGraph.from_pairs(n, {(i, j): w for i in range(n) for j in range(i + 1, n)})
    pairs: dict[tuple[int, int], int] = {}
    for i in range(spec.p - 1):
        pairs[(i, i + 1)] = 1
    cliques: list[list[int]] = []
    nxt = spec.p
    for size in spec.clique_sizes:
        cliques.append(list(range(nxt, nxt + size)))
        nxt += size
    for i, cl in enumerate(cliques):
        for x in cl:
            pairs[(i, x)] = w
            pairs[(i + 1, x)] = w
        for a in range(len(cl)):
            for b in range(a + 1, len(cl)):
                pairs[(cl[a], cl[b])] = w
        if i + 1 < len(cliques):
            for x in cl:
                for y in cliques[i + 1]:
                    pairs[(x, y)] = w
    return MultiGraph.from_pairs(spec.n, pairs)


def _crowded_on(g: MultiGraph, parade: tuple[int, ...], w: int) -> tuple[int, ...] | None:
    """Clique sizes if ``g`` is a w-saturated crowded parade on ``parade``."""
    p = len(parade)
    pos = {v: i for i, v in enumerate(parade)}
    slot: dict[int, int] = {}
    for x in range(g.n):
        if x in pos:
            continue
        hits = sorted(pos[v] for v in g.neighbors(x) if v in pos)
        if len(hits) != 2 or hits[1] != hits[0] + 1:
            return None
        slot[x] = hits[0]
    for a in range(g.n):
        for b in range(a + 1, g.n):
            m = g.mult[a][b]
            on_parade = a in pos and b in pos and abs(pos[a] - pos[b]) == 1
            if on_parade:
                continue  # parade edges are single by uniqueness
            if m and m != w:
                return None
            if a in slot and b in slot:
                # outside vertices sharing a parade vertex must be joined
                if abs(slot[a] - slot[b]) <= 1 and not m:
                    return None
    sizes = [0] * (p - 1)
    for s in slot.values():
        sizes[s] += 1
    return tuple(sizes)


def is_crowded_parade(g: MultiGraph, m: int) -> CrowdedParadeSpec | None:
    """Recognise an m-saturated crowded parade; returns an orientation-normalised spec.

    A graph may be crowded on one parade but not another, so all parades are tried.
    """
    w = min(m, MAX_MULT)
    parades = all_parades(g)
    p = len(parades[0])
    if p == 1:
        if m < 2:
            return None
        if all(g.mult[i][j] == w for i in range(g.n) for j in range(i + 1, g.n)):
            return CrowdedParadeSpec(1, m, (), g.n)
        return None
    for par in parades:
        sizes = _crowded_on(g, par, w)
        if sizes is not None:
            return CrowdedParadeSpec(p, m, sizes).canonical()
    return None


def single_edge_additions(g: MultiGraph, m: int) -> list[MultiGraph]:
    cap = min(m, MAX_MULT)
    return [
        g.with_mult(i, j, g.mult[i][j] + 1)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if g.mult[i][j] < cap
    ]


def verify_maximality(g: MultiGraph, m: int, memo: FloorMemo | None = None, *, limit: int = VERIFY_MAX_N) -> bool:
    """True iff every legal single-edge addition strictly raises the spectator floor.

    Graphs in the class share the vertex count, so a proper minor-superset
    within the class is a proper supergraph; by monotonicity single edges suffice.
    """
    if g.n > limit:
        raise SizeGuardError("verify-maximality-n", f"n={g.n} > {limit}")
    if m < 2 and not g.is_simple:
        raise GraphError("graph exceeds the multiplicity cap")
    memo = memo if memo is not None else FloorMemo()
    k = memo.value(g)
    return all(memo.value(h) > k for h in single_edge_additions(g, m))


def admissible(n: int, k: int, m: int) -> bool:
    return (0 <= k <= n - 2 and m >= 1) or (k == n - 1 and m >= 2)


def crowded_specs(n: int, m: int, k: int) -> list[CrowdedParadeSpec]:
    """Every orientation-normalised m-saturated crowded (n - k)-parade spec on n vertices."""
    p = n - k
    if p == 1:
        return [CrowdedParadeSpec(1, m, (), n)] if m >= 2 else []
    if p < 2:
        return []
    out = set()
    for sizes in _compositions(k, p - 1):
        out.add(CrowdedParadeSpec(p, m, sizes).canonical())
    return sorted(out, key=lambda s: s.clique_sizes)


def _compositions(total: int, parts: int):
    for sizes in product(range(total + 1), repeat=parts):
        if sum(sizes) == total:
            yield sizes
