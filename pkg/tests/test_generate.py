from __future__ import annotations

import pytest

from starcut import (
    OCCURRENCE_CAP,
    complete,
    element_occurrences,
    gen_random_3dm,
    gen_random_graph,
    solve_3dm,
    verify_matching,
)


def test_gen_graph_deterministic():
    a = gen_random_graph(9, 0.4, 77)
    b = gen_random_graph(9, 0.4, 77)
    assert a == b
    assert any(gen_random_graph(9, 0.4, s) != a for s in range(5))


def test_gen_graph_extremes():
    assert gen_random_graph(6, 0.0, 1).edge_count == 0
    assert gen_random_graph(6, 1.0, 1) == complete(6)
    assert gen_random_graph(0, 0.5, 1).n == 0


def test_gen_graph_validation():
    with pytest.raises(ValueError):
        gen_random_graph(-1, 0.5, 0)
    with pytest.raises(ValueError):
        gen_random_graph(4, 1.5, 0)
    with pytest.raises(ValueError):
        gen_random_graph(4, -0.1, 0)


def test_gen_3dm_deterministic():
    a = gen_random_3dm(3, 2, True, 5)
    b = gen_random_3dm(3, 2, True, 5)
    assert a == b


@pytest.mark.parametrize("seed", range(8))
def test_gen_3dm_solvable_has_matching(seed):
    inst = gen_random_3dm(2, 1, True, seed)
    assert inst.n == 2
    assert len(inst.triples) == 3
    assert len(set(inst.triples)) == 3
    sol = solve_3dm(inst)
    assert sol is not None
    assert verify_matching(inst, sol)
    assert max(element_occurrences(inst)) <= OCCURRENCE_CAP


@pytest.mark.parametrize("seed", range(6))
def test_gen_3dm_planted_prefix_is_a_matching(seed):
    inst = gen_random_3dm(4, 3, True, seed)
    assert verify_matching(inst, tuple(range(4)))


def test_gen_3dm_unsolvable():
    inst = gen_random_3dm(2, 0, False, 3)
    assert len(inst.triples) == 2
    assert solve_3dm(inst) is None
    assert max(element_occurrences(inst)) <= OCCURRENCE_CAP


def test_gen_3dm_unsolvable_impossible_for_singletons():
    # the only n=1 triple is (1,1,1), so every nonempty instance is solvable
    with pytest.raises(ValueError, match="no unsolvable instance"):
        gen_random_3dm(1, 0, False, 0)


def test_gen_3dm_extras_blocked_by_cap():
    # n=1 admits a single distinct triple, already spent on the planted one
    with pytest.raises(ValueError, match="lower extra or raise n"):
        gen_random_3dm(1, 1, True, 0)
    # n=2: first coordinates give at most 2*OCCURRENCE_CAP = 6 triples total
    with pytest.raises(ValueError):
        gen_random_3dm(2, 5, True, 0)


def test_gen_3dm_validation():
    with pytest.raises(ValueError):
        gen_random_3dm(0, 0, True, 0)
    with pytest.raises(ValueError):
        gen_random_3dm(2, -1, True, 0)
