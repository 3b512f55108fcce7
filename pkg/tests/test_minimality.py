from __future__ import annotations

import pytest

from specfloor import census
from specfloor.floor import FloorMemo, spectator_floor
from specfloor.graph import GraphError, contract_edge, delete_edge, disjoint_union
from specfloor.minimality import (
    classify_floor_zero,
    contains_minor,
    diametric_edge_core,
    elementary_minors,
    is_minor_minimal,
    is_minor_minimal_tree,
)
from specfloor.named import complete, digon, name_of, named, path, star


def _names(g, simple_mode=False):
    return sorted(name_of(h) or str(h) for _, h in elementary_minors(g, simple_mode))


def test_elementary_minor_examples():
    assert _names(named("K3")) == ["C2", "P3"]
    assert _names(named("C4")) == ["K3", "P4"]
    assert elementary_minors(named("K1")) == []
    # simple mode collapses the contracted triangle
    assert _names(named("K3"), simple_mode=True) == ["P2", "P3"]


def test_named_minor_steps():
    assert contract_edge(named("3-sun"), (1, 2)).key == named("H4").key
    h = delete_edge(named("H1"), (0, 1))
    assert h.mult[0][1] == 1 and h.mult[0][2] == 2 and h.mult[1][2] == 2


@pytest.mark.parametrize(
    "g, simple_mode, minimal",
    [
        (star(3), True, True),
        (path(5), True, False),
        (named("3-sun"), True, True),
        (named("H4"), False, True),
        (named("K1"), True, True),
        (path(2), True, False),
        (complete(4), True, False),
    ],
)
def test_minimality_examples(g, simple_mode, minimal):
    v = is_minor_minimal(g, simple_mode)
    assert v.minimal is minimal
    if not minimal:
        assert v.minor_floor == v.floor


def test_tree_criterion():
    assert is_minor_minimal_tree(star(4))
    assert not is_minor_minimal_tree(path(5))
    assert is_minor_minimal_tree(named("long Y"))
    assert diametric_edge_core(path(3)) == {(0, 1), (1, 2)}
    with pytest.raises(GraphError):
        is_minor_minimal_tree(named("C4"))


def test_tree_criterion_agrees_with_minor_check():
    memo = FloorMemo()
    for n in range(2, 10):
        for t in census.trees(n):
            assert is_minor_minimal_tree(t) == bool(is_minor_minimal(t, True, memo))


def test_floor_zero_classification():
    memo = FloorMemo()
    for n in range(1, 6):
        for g in census.all_multigraphs(n):
            assert classify_floor_zero(g) == (memo.value(g) == 0)


def test_contains_minor_examples():
    assert contains_minor(named("3-sun"), complete(3))
    assert not contains_minor(path(6), digon())
    assert contains_minor(named("C4"), complete(3))
    assert not contains_minor(star(4), path(4))
    assert contains_minor(named("H1"), named("H3").induced([0, 1, 2]).with_mult(1, 2, 2)) is True


def test_contains_minor_agrees_with_minor_closure():
    # the minor closure of a graph, computed by repeated elementary minors
    def closure(g):
        seen = {g.key: g}
        stack = [g]
        while stack:
            x = stack.pop()
            for _, h in elementary_minors(x):
                if h.key not in seen:
                    seen[h.key] = h
                    stack.append(h)
        return seen

    patterns = [digon(), disjoint_union(digon(), digon()), named("H3"), complete(3), star(3)]
    for n in range(1, 5):
        for g in census.connected_multigraphs(n):
            c = closure(g)
            for p in patterns:
                assert contains_minor(g, p) == (p.key in c), (g, p)


def test_two_disjoint_cycles_witness_floor_two():
    two = disjoint_union(digon(), digon())
    memo = FloorMemo()
    for n in range(1, 6):
        for g in census.connected_multigraphs(n):
            if contains_minor(g, two) or contains_minor(g, named("H3")):
                assert memo.value(g) >= 2
