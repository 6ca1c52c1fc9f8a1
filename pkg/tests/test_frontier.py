import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from arithstruct.errors import DimensionMismatch
from arithstruct.frontier import Frontier, leq, minimal_elements

vecs = st.lists(st.tuples(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6)), max_size=25)


@given(vecs)
def test_minimal_elements_matches_naive(vs):
    assert sorted(minimal_elements(vs)) == oracles.naive_minimal(vs)


@given(vecs)
def test_result_is_antichain(vs):
    F = Frontier(vs)
    assert all(not leq(u, v) for u in F for v in F if u != v)
    assert all(F.dominates_some(v) for v in vs)


@given(vecs, st.randoms())
def test_insert_order_independent(vs, rnd):
    a = Frontier((), 3)
    for v in vs:
        a = a.insert_min(v)
    shuffled = list(vs)
    rnd.shuffle(shuffled)
    b = Frontier((), 3)
    for v in shuffled:
        b = b.insert_min(v)
    assert a == b == Frontier(vs, 3)


@given(vecs, vecs, vecs)
def test_merge_algebra(x, y, z):
    A, B, C = Frontier(x, 3), Frontier(y, 3), Frontier(z, 3)
    assert A.merge(B) == B.merge(A)
    assert A.merge(B).merge(C) == A.merge(B.merge(C))
    assert A.merge(A) == A


def test_basic_queries_and_json():
    F = Frontier([(1, 3), (2, 2), (3, 1), (2, 3)])
    assert list(F) == [(1, 3), (2, 2), (3, 1)]
    assert (2, 2) in F and (2, 3) not in F
    assert F.dominates_some((5, 2)) and not F.dominates_some((1, 2))
    assert F.max_coords() == (3, 3)
    assert Frontier.from_json(F.to_json()) == F
    assert len(Frontier()) == 0


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        Frontier([(1, 2), (1, 2, 3)])
    with pytest.raises(DimensionMismatch):
        Frontier([(1, 2)]).insert_min((1, 2, 3))
    with pytest.raises(DimensionMismatch):
        Frontier([(1, 2)]).merge(Frontier([(1, 2, 3)]))
