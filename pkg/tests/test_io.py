from __future__ import annotations

import itertools
import random
import warnings

import networkx as nx
import pytest

from specfloor.graph import MultiGraph
from specfloor.io import (
    CappedMultiplicityWarning,
    FormatError,
    ParseError,
    decode,
    detect_format,
    encode,
    from_edge_list,
    from_graph6,
    from_sparse6,
    parse_graph,
    read_graphs,
    serialize_graph,
    to_edge_list,
    to_graph6,
    to_sparse6,
)
from specfloor.named import digon, named, path

from conftest import random_multigraph


def _nx(g: MultiGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def test_known_graph6_strings():
    assert to_graph6(MultiGraph.empty(1)) == "@"
    assert to_graph6(path(2)) == "A_"
    assert to_graph6(named("C4")) == "Cl"
    # another labelling of the same cycle
    assert from_graph6(">>graph6<<Cr").key == named("C4").key


def test_graph6_matches_networkx_bit_for_bit():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 70)
        g = random_multigraph(rng, n, weights=(0, 1)) if n <= 12 else MultiGraph.from_edges(
            n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.1]
        )
        ours = to_graph6(g)
        assert ours == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
        assert from_graph6(ours) == g


def test_sparse6_matches_networkx_bit_for_bit():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(2, 40)
        g = MultiGraph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.2])
        ours = to_sparse6(g)
        assert ours == nx.to_sparse6_bytes(_nx(g), header=False).decode().strip()
        assert from_sparse6(ours) == g


def test_sparse6_round_trips_multigraphs():
    rng = random.Random(7)
    for _ in range(300):
        g = random_multigraph(rng, rng.randint(1, 9))
        assert from_sparse6(to_sparse6(g)) == g
        assert decode(encode(g)) == g
        assert from_edge_list(to_edge_list(g)) == g


def test_graph6_refuses_multigraph():
    with pytest.raises(FormatError):
        to_graph6(digon())
    assert encode(digon()).startswith(":")


def test_edge_list_repeats_make_a_digon():
    assert from_edge_list("0 1\n0 1") == digon()
    assert parse_graph("# comment\nn=3\n0 1\n", "edges") == MultiGraph.from_edges(3, [(0, 1)])


def test_sparse6_caps_triple_edges_with_warning():
    G = nx.MultiGraph()
    G.add_edges_from([(0, 1)] * 3)
    # networkx writes parallel edges of a MultiGraph in sparse6
    s = nx.to_sparse6_bytes(G, header=False).decode().strip()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = from_sparse6(s)
    assert g == digon()
    assert any(issubclass(w.category, CappedMultiplicityWarning) for w in caught)


@pytest.mark.parametrize(
    "text, fmt",
    [
        ("C\x10", "graph6"),  # character below '?'
        ("Cr~", "graph6"),  # trailing data
        ("C", "graph6"),  # truncated
        (":A\x10", "sparse6"),
        ("0 x", "edges"),
        ("0 0", "edges"),
    ],
)
def test_parse_errors_carry_offsets(text, fmt):
    with pytest.raises(ParseError) as info:
        parse_graph(text, fmt)
    assert isinstance(info.value.offset, int)
    assert 0 <= info.value.offset <= len(text)


def test_detect_and_stream():
    assert detect_format("Cr") == "graph6"
    assert detect_format(":Ab") == "sparse6"
    assert detect_format("0 1\n1 2") == "edges"
    gs = list(read_graphs("Cr\n:Ab\n\n@\n"))
    assert [g.key for g in gs] == [named("C4").key, digon().key, MultiGraph.empty(1).key]
    assert serialize_graph(digon(), "edges").splitlines()[0] == "n=2"
