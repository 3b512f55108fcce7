from __future__ import annotations

import itertools
import random

import pytest

from specfloor import census
from specfloor.floor import (
    FloorMemo,
    bruteforce_certificate,
    floor_lower_bound,
    spectator_floor,
    spectator_floor_bruteforce,
)
from specfloor.graph import GraphError, MultiGraph, SizeGuardError, add_isolated_vertex, diameter, disjoint_union
from specfloor.minimality import elementary_minors
from specfloor.named import complete, cycle, named, path, star
from specfloor.parade import is_unique_shortest_path, spectator_number


@pytest.mark.parametrize(
    "name, floor",
    [("K1", 0), ("P4", 0), ("C4", 2), ("long Y", 2), ("3-sun", 2), ("C2", 1), ("K3", 1), ("K1,3", 1),
     ("H1", 2), ("H2", 2), ("H3", 2), ("H4", 2), ("H5", 2)],
)
def test_named_floors(name, floor):
    g = named(name)
    assert spectator_floor(g).uspcf == floor
    assert spectator_floor_bruteforce(g) == floor


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_star_floor(k):
    assert spectator_floor(star(k + 2)).uspcf == k


def test_paths_are_floor_zero():
    for n in range(1, 10):
        assert spectator_floor(path(n)).uspcf == 0


@pytest.mark.parametrize("name, bound", [("C4", 2), ("3-sun", 2), ("P5", None)])
def test_lower_bound_examples(name, bound):
    g = path(5) if name == "P5" else named(name)
    assert floor_lower_bound(g) == (0 if bound is None else bound)


def test_lower_bound_needs_connected():
    with pytest.raises(GraphError):
        floor_lower_bound(disjoint_union(path(2), path(2)))


def test_random_trees_follow_diameter_formula():
    rng = random.Random(9)
    for _ in range(30):
        n = 9
        edges = [(v, rng.randrange(v)) for v in range(1, n)]
        t = MultiGraph.from_edges(n, edges)
        assert spectator_floor(t, use_tree_formula=False).uspcf == n - diameter(t) - 1


def test_witness_contains_input_and_realises_floor():
    rng = random.Random(1)
    for _ in range(80):
        n = rng.randint(1, 7)
        g = MultiGraph.from_pairs(n, {(i, j): rng.choice((0, 0, 1, 2)) for i in range(n) for j in range(i + 1, n)})
        cert = spectator_floor(g)
        assert g.is_subgraph_of(cert.witness)
        assert spectator_number(cert.witness) == cert.uspcf
        assert cert.uspcf <= spectator_number(g)


def test_bruteforce_witness_realises_value():
    for g in [named("C4"), named("3-sun"), named("H2"), star(4)]:
        best, w = bruteforce_certificate(g)
        assert g.is_subgraph_of(w)
        assert spectator_number(w) == best


def test_isolated_vertex_adds_nothing():
    for g in census.connected_graphs(5):
        assert spectator_floor(add_isolated_vertex(g)).uspcf == spectator_floor(g).uspcf


def test_floor_sandwich_on_census():
    for n in range(1, 7):
        for g in census.connected_graphs(n):
            f = spectator_floor(g).uspcf
            assert floor_lower_bound(g) <= f <= spectator_number(g)


def test_minor_monotone_on_small_multigraphs():
    memo = FloorMemo()
    for n in range(1, 5):
        for g in census.all_multigraphs(n):
            k = memo.value(g)
            for _, h in elementary_minors(g):
                assert memo.value(h) <= k


def test_simple_cap_matches_bruteforce():
    for g in census.connected_graphs(5):
        assert spectator_floor(g, 1).uspcf == spectator_floor_bruteforce(g, 1)


def test_pruned_matches_bruteforce_on_small_multigraphs():
    for n in range(1, 5):
        for g in census.all_multigraphs(n):
            assert spectator_floor(g).uspcf == spectator_floor_bruteforce(g)


def test_simple_additivity_small():
    pool = list(census.graphs_up_to(3))
    for a, b in itertools.product(pool, pool):
        u = disjoint_union(a, b)
        assert spectator_floor_bruteforce(u, 1) == spectator_floor(a).uspcf + spectator_floor(b).uspcf


def test_memo_lattice_search_agrees():
    memo = FloorMemo()
    for g in census.connected_graphs(6):
        assert spectator_floor(g, memo=memo).uspcf == spectator_floor(g).uspcf
    # the canonical-key lattice search kicks in from eight vertices
    for g in [cycle(8), star(6), disjoint_union(named("3-sun"), path(2)), named("long Y").add_edge(0, 2)]:
        g8 = g if g.n == 8 else disjoint_union(g, path(8 - g.n))
        assert spectator_floor(g8, memo=memo).uspcf == spectator_floor(g8).uspcf


def test_cap_errors_and_guards():
    with pytest.raises(GraphError):
        spectator_floor(named("C2"), 1)
    with pytest.raises(SizeGuardError) as info:
        spectator_floor_bruteforce(path(8))
    assert info.value.guard == "bruteforce-n"


def test_trace_records_search():
    trace: list = []
    spectator_floor(cycle(5), trace=trace, use_tree_formula=False)
    assert trace
    assert spectator_floor(complete(5)).uspcf == 3
