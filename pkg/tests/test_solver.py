from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import connected_corpus
from starcut import (
    STRUCTURE,
    SUBSTRUCTURE,
    SearchOptions,
    Star,
    build,
    complete,
    cycle,
    enumerate_stars,
    gen_random_graph,
    is_connected,
    is_structure_cut,
    is_substructure_cut,
    min_star_partition,
    oracle_connectivity,
    path,
    star,
    structure_connectivity,
    substructure_connectivity,
)

BOWTIE = build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _cert(res):
    if res.certificate is None:
        return None
    return tuple((s.center, s.leaves) for s in res.certificate.elements)


# -- frozen values, each re-derivable by hand ------------------------------


def test_bowtie_structure_m2():
    res = structure_connectivity(BOWTIE, 2, 5)
    assert (res.value, res.bound, res.complete) == (1, 1, True)
    assert _cert(res) == ((2, (0, 3)),)


def test_cycle5_substructure_m1():
    res = substructure_connectivity(cycle(5), 1, 5)
    assert res.value == 2
    assert _cert(res) == ((0, ()), (2, ()))


def test_cycle6_structure_m2_conventions():
    res = structure_connectivity(cycle(6), 2, 6)
    assert res.value == 2
    assert _cert(res) == ((0, (1, 5)), (3, (2, 4)))
    strict = structure_connectivity(cycle(6), 2, 6, SearchOptions(strict_trivial=True))
    assert (strict.value, strict.complete) == (None, True)
    assert strict.bound == 6


def test_cycle5_structure_m2_absent():
    res = structure_connectivity(cycle(5), 2, 5)
    assert (res.value, res.certificate, res.complete) == (None, None, True)


def test_path4_structure_m1():
    res = structure_connectivity(path(4), 1, 4)
    assert res.value == 1
    assert _cert(res) == ((1, (2,)),)


def test_k4_substructure_m2():
    res = substructure_connectivity(complete(4), 2, 4)
    assert res.value == 1
    assert _cert(res) == ((0, (1, 2)),)


def test_k4_structure_m3_conventions():
    assert structure_connectivity(complete(4), 3, 4).value == 1
    strict = structure_connectivity(complete(4), 3, 4, SearchOptions(strict_trivial=True))
    assert (strict.value, strict.complete) == (None, True)


def test_path3_substructure_m1():
    assert substructure_connectivity(path(3), 1, 3).value == 1


def test_star_graph_center_is_a_cut():
    g = star(4)
    res = substructure_connectivity(g, 1, 4)
    assert res.value == 1
    # the bare center K_1 precedes any leafed star in lexicographic order
    assert _cert(res) == ((0, ()),)


def test_m0_families_are_singletons():
    g = cycle(4)
    res = structure_connectivity(g, 0, 4)
    assert res.value == 2
    assert _cert(res) == ((0, ()), (2, ()))
    sub = substructure_connectivity(g, 0, 4)
    assert (sub.value, _cert(sub)) == (res.value, _cert(res))


def test_induced_option_changes_k4():
    g = complete(4)
    plain = substructure_connectivity(g, 2, 4)
    induced = substructure_connectivity(g, 2, 4, SearchOptions(induced=True))
    assert plain.value == 1
    assert induced.value == 2
    assert is_substructure_cut(g, induced.certificate, 2, induced=True)


# -- input validation -------------------------------------------------------


def test_rejects_disconnected_input():
    g = build(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        structure_connectivity(g, 1, 2)


def test_rejects_tiny_input():
    with pytest.raises(ValueError):
        substructure_connectivity(build(1, []), 1, 1)


@pytest.mark.parametrize("m,tmax", [(-1, 2), (1, 0)])
def test_rejects_bad_parameters(m, tmax):
    with pytest.raises(ValueError):
        structure_connectivity(path(3), m, tmax)


def test_time_limit_reports_incomplete():
    res = structure_connectivity(BOWTIE, 2, 5, SearchOptions(time_limit=1e-9))
    assert (res.value, res.certificate, res.bound, res.complete) == (None, None, 0, False)


# -- result is independent of pruning and scheduling -------------------------


_PRUNE_FLAGS = (
    "prune_untouched",
    "prune_damage_order",
    "prune_symmetry",
    "prune_degree_bound",
    "prune_center_skip",
)


def _option_variants(strict):
    yield SearchOptions(strict_trivial=strict)
    yield SearchOptions(strict_trivial=strict, **{f: False for f in _PRUNE_FLAGS})
    for flag in _PRUNE_FLAGS:
        yield SearchOptions(strict_trivial=strict, **{flag: False})


@pytest.mark.parametrize("strict", [False, True])
def test_prune_toggles_do_not_change_answers(strict):
    for g, *_ in connected_corpus(12, max_n=8, seed0=100):
        for m in (1, 2):
            for fn in (structure_connectivity, substructure_connectivity):
                results = [fn(g, m, g.n, o) for o in _option_variants(strict)]
                vals = {(r.value, _cert(r), r.complete) for r in results}
                assert len(vals) == 1, f"options disagree on {g.edges()} m={m}: {vals}"


def test_parallel_matches_sequential():
    for g, *_ in connected_corpus(6, max_n=9, seed0=300):
        seq = substructure_connectivity(g, 2, g.n)
        par = substructure_connectivity(g, 2, g.n, SearchOptions(workers=2))
        assert (seq.value, _cert(seq), seq.complete) == (par.value, _cert(par), par.complete)


def test_solver_is_deterministic():
    g = connected_corpus(1, max_n=9, seed0=77)[0][0]
    a = structure_connectivity(g, 2, g.n)
    b = structure_connectivity(g, 2, g.n)
    assert a == b


# -- star enumeration and partitions ----------------------------------------


def test_enumerate_stars_k4_exact():
    stars = enumerate_stars(complete(4), 3, True)
    assert [s.center for s in stars] == [0, 1, 2, 3]
    assert stars[0] == Star(0, (1, 2, 3))


def test_enumerate_stars_k4_m1_exact_dedups_orientations():
    stars = enumerate_stars(complete(4), 1, True)
    assert len(stars) == 6
    assert all(s.center < s.leaves[0] for s in stars)


def test_enumerate_stars_inexact_counts():
    # P3: three K_1, two K_{1,1} after canonical dedup, one K_{1,2}
    stars = enumerate_stars(path(3), 2, False)
    assert len(stars) == 6
    assert stars == sorted(stars, key=Star.sort_key)
    assert len(set(stars)) == len(stars)


def test_enumerate_stars_exact_m0():
    assert enumerate_stars(path(2), 0, True) == [Star(0, ()), Star(1, ())]


def test_min_star_partition_cases():
    k4 = complete(4)
    assert min_star_partition(k4, range(4), 1, True) == 2
    assert min_star_partition(k4, range(4), 3, True) == 1
    assert min_star_partition(path(3), [0, 2], 1, True) is None
    assert min_star_partition(path(3), [0, 2], 1, False) == 2
    assert min_star_partition(k4, [], 3, True) == 0
    assert min_star_partition(path(4), range(4), 1, True) == 2


def test_min_star_partition_induced():
    t = complete(3)
    assert min_star_partition(t, range(3), 2, True) == 1
    assert min_star_partition(t, range(3), 2, True, induced=True) is None


# -- agreement with the independent oracle -----------------------------------


def test_oracle_refuses_oversize_graphs():
    g = cycle(16)
    with pytest.raises(ValueError):
        oracle_connectivity(g, 1, STRUCTURE, 4)
    res = oracle_connectivity(g, 1, STRUCTURE, 4, size_cap=16)
    assert res.value == 2


@settings(deadline=None, max_examples=60)
@given(
    st.integers(0, 4000),
    st.integers(4, 7),
    st.sampled_from([0.3, 0.5, 0.8]),
    st.integers(0, 3),
    st.sampled_from([STRUCTURE, SUBSTRUCTURE]),
    st.booleans(),
)
def test_solver_agrees_with_oracle(seed, n, p, m, kind, strict):
    g = gen_random_graph(n, p, seed)
    if g.n < 2 or not is_connected(g):
        return
    fn = structure_connectivity if kind == STRUCTURE else substructure_connectivity
    got = fn(g, m, g.n, SearchOptions(strict_trivial=strict))
    want = oracle_connectivity(g, m, kind, g.n, strict_trivial=strict)
    assert (got.value, got.complete) == (want.value, want.complete)
    if got.value is not None:
        check = is_structure_cut if kind == STRUCTURE else is_substructure_cut
        assert check(g, got.certificate, m, strict_trivial=strict)
        assert check(g, want.certificate, m, strict_trivial=strict)
        assert len(got.certificate.elements) == got.value


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 2000), st.integers(5, 7), st.integers(1, 2))
def test_induced_solver_agrees_with_oracle(seed, n, m):
    g = gen_random_graph(n, 0.6, seed)
    if g.n < 2 or not is_connected(g):
        return
    got = substructure_connectivity(g, m, g.n, SearchOptions(induced=True))
    want = oracle_connectivity(g, m, SUBSTRUCTURE, g.n, induced=True)
    assert got.value == want.value


def test_substructure_never_exceeds_structure():
    for g, *_ in connected_corpus(10, max_n=8, seed0=500):
        for m in (1, 2, 3):
            ks = structure_connectivity(g, m, g.n)
            kss = substructure_connectivity(g, m, g.n)
            if ks.value is not None:
                assert kss.value is not None and kss.value <= ks.value
