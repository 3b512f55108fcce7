from __future__ import annotations

import networkx as nx

from specfloor import census
from specfloor.graph import is_connected, is_tree


def test_connected_counts():
    assert [len(census.connected_graphs(n)) for n in range(1, 7)] == [census.CONNECTED_COUNTS[n] for n in range(1, 7)]


def test_tree_counts():
    assert [len(census.trees(n)) for n in range(1, 10)] == [census.TREE_COUNTS[n] for n in range(1, 10)]
    assert all(is_tree(t) for n in range(1, 10) for t in census.trees(n))


def test_census_matches_networkx_atlas():
    atlas = nx.graph_atlas_g()
    for n in range(1, 7):
        want = sum(1 for G in atlas if G.number_of_nodes() == n and nx.is_connected(G))
        assert len(census.connected_graphs(n)) == want
        assert len(census.all_graphs(n)) == sum(1 for G in atlas if G.number_of_nodes() == n)


def test_multigraph_counts():
    # capped multigraphs: each simple graph with its edges optionally doubled, up to isomorphism
    assert [len(census.connected_multigraphs(n)) for n in range(1, 5)] == [1, 2, 7, 53]
    assert [len(census.all_multigraphs(n)) for n in range(1, 5)] == [1, 3, 10, 66]
    assert all(is_connected(g) for g in census.connected_multigraphs(4))


def test_representatives_are_distinct():
    for n in range(1, 6):
        gs = census.connected_multigraphs(n)
        assert len({g.key for g in gs}) == len(gs)
