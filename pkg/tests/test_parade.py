from __future__ import annotations

import numpy as np
import pytest
import random
from hypothesis import given, settings
from hypothesis import strategies as st

from specfloor import census
from specfloor.graph import GraphError, MultiGraph, delete_edge, disjoint_union, is_connected
from specfloor.named import complete, digon, named, path, star
from specfloor.parade import (
    SaturatingCountMatrix,
    all_parades,
    is_unique_shortest_path,
    parade_number_bfs,
    parade_number_matrix,
    spectator_number,
)

from conftest import path_oracle_usp, random_multigraph


@pytest.mark.parametrize(
    "name, usp",
    [("K1", 1), ("C4", 2), ("P3", 3), ("H4", 3), ("H5", 3), ("P4", 4), ("C2", 1), ("3-sun", 4), ("H1", 1)],
)
def test_parade_numbers(name, usp):
    g = named(name)
    assert parade_number_bfs(g).usp == usp
    assert parade_number_matrix(g).usp == usp


@pytest.mark.parametrize("name, uspc", [("K1,4", 2), ("H1", 2), ("H2", 2), ("H3", 2), ("H4", 2), ("H5", 2), ("3-sun", 2)])
def test_spectator_numbers(name, uspc):
    assert spectator_number(named(name)) == uspc


def test_paths_are_their_own_parade():
    for n in range(1, 9):
        cert = parade_number_bfs(path(n))
        assert cert.uspc == 0
        assert sorted(cert.witness) == list(range(n))


def test_p3_matrix_powers():
    a = SaturatingCountMatrix.shifted_adjacency(path(3))
    sq = a @ a
    assert sq.data[0, 2] == 1
    assert not (sq @ a).has_one()
    assert (sq @ a).all_above_one()


def test_saturating_product_caps_at_two():
    a = SaturatingCountMatrix.shifted_adjacency(complete(4))
    assert int(np.max((a @ a).data)) == 2


def test_matrix_route_requires_connected():
    with pytest.raises(GraphError):
        parade_number_matrix(disjoint_union(path(2), path(2)))


def test_routes_agree_with_path_enumeration_on_census():
    for n in range(1, 7):
        for g in census.connected_graphs(n):
            expected = path_oracle_usp(g)
            assert parade_number_bfs(g).usp == expected
            assert parade_number_matrix(g).usp == expected


def test_routes_agree_on_random_multigraphs():
    rng = random.Random(3)
    for _ in range(200):
        g = random_multigraph(rng, rng.randint(1, 7))
        expected = path_oracle_usp(g)
        assert parade_number_bfs(g).usp == expected
        if is_connected(g):
            assert parade_number_matrix(g).usp == expected


def test_every_parade_is_a_unique_shortest_path():
    rng = random.Random(4)
    for _ in range(100):
        g = random_multigraph(rng, rng.randint(1, 7))
        usp = parade_number_bfs(g).usp
        parades = all_parades(g)
        assert parades
        for p in parades:
            assert len(p) == usp
            assert is_unique_shortest_path(g, p)


def test_parallel_edges_break_uniqueness():
    assert not is_unique_shortest_path(digon(), (0, 1))
    assert is_unique_shortest_path(path(2), (0, 1))
    assert not is_unique_shortest_path(named("C4"), (0, 1, 2))


@st.composite
def multigraph_and_pair(draw):
    n = draw(st.integers(2, 7))
    rng = random.Random(draw(st.integers(0, 10**6)))
    g = random_multigraph(rng, n, weights=(0, 1, 2, 2))
    doubled = [(u, v) for u, v, m in g.pairs() if m == 2]
    return g, doubled


@settings(max_examples=120, deadline=None)
@given(multigraph_and_pair())
def test_removing_a_parallel_copy_never_raises_spectators(data):
    g, doubled = data
    for e in doubled:
        assert spectator_number(delete_edge(g, e)) <= spectator_number(g)


def test_star_witness_endpoints_are_leaves():
    cert = parade_number_bfs(star(4))
    assert cert.usp == 3
    assert cert.witness[1] == 0
