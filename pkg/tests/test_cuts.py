from __future__ import annotations

import pytest

from starcut import (
    STRUCTURE,
    SUBSTRUCTURE,
    CutFamily,
    Star,
    build,
    canonical_star,
    complete,
    cycle,
    family_mask,
    is_structure_cut,
    is_subgraph_cut,
    is_substructure_cut,
    path,
    remainder_is_cut,
    star_induced_in,
    star_valid_in,
)

BOWTIE = build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def test_star_stores_leaves_increasing():
    s = Star(3, (1, 5))
    assert s.leaf_count == 2
    assert s.vertices() == (1, 3, 5)


@pytest.mark.parametrize("leaves", [(5, 1), (1, 1), (2, 2, 3)])
def test_star_rejects_non_increasing_leaves(leaves):
    with pytest.raises(ValueError):
        Star(0, leaves)


def test_star_rejects_center_among_leaves():
    with pytest.raises(ValueError):
        Star(2, (1, 2))


def test_canonical_star_flips_single_edge():
    assert canonical_star(5, (2,)) == Star(2, (5,))
    assert canonical_star(2, (5,)) == Star(2, (5,))
    # larger stars keep their orientation; leaves get sorted
    assert canonical_star(5, (7, 2)) == Star(5, (2, 7))
    assert canonical_star(4, ()) == Star(4, ())


def test_star_valid_in_checks_center_leaf_edges():
    g = path(3)
    assert star_valid_in(g, Star(1, (0, 2)))
    assert not star_valid_in(g, Star(0, (2,)))
    assert star_valid_in(g, Star(2, ()))
    with pytest.raises(ValueError):
        star_valid_in(g, Star(9, ()))


def test_induced_star_rejects_adjacent_leaves():
    t = cycle(3)
    assert star_valid_in(t, Star(0, (1, 2)))
    assert not star_induced_in(t, Star(0, (1, 2)))
    assert star_induced_in(path(3), Star(1, (0, 2)))


def test_family_kind_bounds():
    with pytest.raises(ValueError):
        CutFamily(STRUCTURE, 2, (Star(0, (1,)),))
    with pytest.raises(ValueError):
        CutFamily(SUBSTRUCTURE, 1, (Star(0, (1, 2)),))
    CutFamily(SUBSTRUCTURE, 2, (Star(0, (1,)),))
    CutFamily(STRUCTURE, 0, (Star(0, ()),))


def test_family_requires_disjoint_elements():
    with pytest.raises(ValueError):
        CutFamily(SUBSTRUCTURE, 2, (Star(0, (1,)), Star(1, (2,))))


def test_family_mask():
    fam = CutFamily(SUBSTRUCTURE, 2, (Star(0, (2,)), Star(4, ())))
    assert family_mask(fam) == 0b10101


def test_remainder_is_cut_conventions():
    g = cycle(6)
    assert remainder_is_cut(g, 0b111111) is True
    assert remainder_is_cut(g, 0b111111, strict_trivial=True) is False
    assert remainder_is_cut(g, 0b111110, strict_trivial=True) is True
    assert remainder_is_cut(g, 0b000110) is False  # leaves a connected path


def test_subgraph_cut_on_path_middle():
    g = path(3)
    fam = CutFamily(SUBSTRUCTURE, 1, (Star(1, ()),))
    assert is_subgraph_cut(g, fam)
    assert is_subgraph_cut(g, fam, strict_trivial=True)


def test_subgraph_cut_trivial_remainder():
    g = complete(4)
    fam = CutFamily(SUBSTRUCTURE, 2, (Star(0, (1, 2)),))
    # one survivor: trivial under both conventions
    assert is_subgraph_cut(g, fam)
    assert is_subgraph_cut(g, fam, strict_trivial=True)


def test_subgraph_cut_empty_remainder_depends_on_convention():
    g = cycle(6)
    fam = CutFamily(STRUCTURE, 2, (Star(0, (1, 5)), Star(3, (2, 4))))
    assert is_subgraph_cut(g, fam)
    assert not is_subgraph_cut(g, fam, strict_trivial=True)


def test_invalid_star_is_an_error_not_false():
    g = path(4)
    fam = CutFamily(SUBSTRUCTURE, 1, (Star(0, (2,)),))
    with pytest.raises(ValueError):
        is_subgraph_cut(g, fam)


def test_overlapping_family_cannot_be_built():
    with pytest.raises(ValueError):
        CutFamily(SUBSTRUCTURE, 2, (Star(2, (0, 3)), Star(3, (4,))))


def test_structure_cut_checks_exact_leaf_count():
    fam = CutFamily(SUBSTRUCTURE, 2, (Star(2, (0, 3)),))
    assert is_substructure_cut(BOWTIE, fam, 2)
    # same family read as a structure cut for m=2 has the right arity
    assert is_structure_cut(BOWTIE, fam, 2)
    # but not for m=3: wrong leaf count is False, not an error
    assert not is_structure_cut(BOWTIE, fam, 3)


def test_substructure_cut_rejects_oversized_elements():
    fam = CutFamily(STRUCTURE, 2, (Star(2, (0, 3)),))
    assert not is_substructure_cut(BOWTIE, fam, 1)
    assert is_substructure_cut(BOWTIE, fam, 5)


def test_induced_flag_threads_through_verifier():
    g = complete(4)
    fam = CutFamily(SUBSTRUCTURE, 2, (Star(0, (1, 2)),))
    assert is_subgraph_cut(g, fam)
    with pytest.raises(ValueError):
        is_subgraph_cut(g, fam, induced=True)


def test_induced_cut_accepts_independent_leaves():
    g = cycle(5)
    fam = CutFamily(SUBSTRUCTURE, 2, (Star(0, (1,)), Star(3, (2, 4))))
    assert is_substructure_cut(g, fam, 2, induced=True)
