import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetgeo import Poset, random_dag
from posetgeo.errors import (
    CycleViolation,
    DuplicateEvent,
    FrozenPosetError,
    UnknownEvent,
)
from posetgeo.poset import Chain

from .conftest import warshall_closure


def build(edges, n):
    poset = Poset()
    for e in range(n):
        poset.add_event(e)
    for a, b in edges:
        poset.add_influence(a, b)
    poset.freeze()
    return poset


def test_leq_matches_warshall_oracle():
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (2, 4), (5, 0)]
    n = 6
    poset = build(edges, n)
    closure = warshall_closure(n, edges)
    for a in range(n):
        for b in range(n):
            assert poset.leq(a, b) == closure[a, b]


@settings(max_examples=50, deadline=None)
@given(st.integers(10, 60), st.floats(0.0, 0.4), st.integers(0, 10_000))
def test_random_dag_closure_matches_oracle(n, p, seed):
    poset = random_dag(n, p, seed)
    edges = [(a, b) for a in poset.events() for b in poset.events()
             if a != b and poset.covers(a, b)]
    closure = warshall_closure(n, edges)
    for a in range(n):
        for b in range(n):
            assert poset.leq(a, b) == closure[a, b]


def test_covers_is_transitive_reduction():
    poset = build([(0, 1), (1, 2), (0, 2)], 3)
    assert poset.covers(0, 1)
    assert poset.covers(1, 2)
    assert not poset.covers(0, 2)  # implied by the chain through 1
    assert set(poset.cover_pairs()) == {(0, 1), (1, 2)}


def test_cycle_rejected():
    poset = Poset()
    for e in range(3):
        poset.add_event(e)
    poset.add_influence(0, 1)
    poset.add_influence(1, 2)
    with pytest.raises(CycleViolation):
        poset.add_influence(2, 0)


def test_duplicate_and_unknown_events():
    poset = Poset()
    poset.add_event(7)
    with pytest.raises(DuplicateEvent):
        poset.add_event(7)
    with pytest.raises(UnknownEvent):
        poset.add_influence(7, 8)


def test_frozen_poset_rejects_mutation():
    poset = build([(0, 1)], 2)
    with pytest.raises(FrozenPosetError):
        poset.add_event(9)
    with pytest.raises(FrozenPosetError):
        poset.add_influence(1, 0)


def test_dual_reverses_order():
    poset = build([(0, 1), (1, 2)], 3)
    dual = poset.dual()
    assert dual.leq(2, 0) and not dual.leq(0, 2)
    assert set(dual.cover_pairs()) == {(2, 1), (1, 0)}


def test_is_chain():
    poset = build([(0, 1), (1, 2), (0, 3)], 4)
    assert poset.is_chain([0, 1, 2])
    assert poset.is_chain([2, 0, 1])  # order of presentation is irrelevant
    assert not poset.is_chain([1, 3])


def test_chain_requires_monotone_valuation():
    poset = build([(0, 1), (1, 2)], 3)
    Chain.build(poset, "c", [0, 1, 2], [0, 1, 2])
    with pytest.raises(ValueError):
        Chain.build(poset, "c", [0, 1, 2], [0, 2, 1])
    with pytest.raises(ValueError):
        Chain.build(poset, "c", [0, 2, 1], [0, 1, 2])


def test_dual_chain_negates_valuations():
    poset = build([(0, 1), (1, 2)], 3)
    chain = Chain.build(poset, "c", [0, 1, 2], [0, 1, 5])
    dual = chain.dual()
    assert list(dual.elements) == [2, 1, 0]
    assert dual.value(2) == -5 and dual.value(0) == 0
