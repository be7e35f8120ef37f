import pytest

from zipzeta import (CartanMatrix, InvalidCartan, NotFiniteType, Root,
                     RootNotInSystem, build_root_system, cartan_matrix,
                     direct_sum)
from helpers import G2_CARTAN, system


def test_rejects_non_square():
    with pytest.raises(InvalidCartan):
        CartanMatrix([[2, 0]])


def test_rejects_bad_diagonal():
    with pytest.raises(InvalidCartan):
        CartanMatrix([[1]])


def test_rejects_positive_off_diagonal():
    with pytest.raises(InvalidCartan):
        CartanMatrix([[2, 1], [-1, 2]])


def test_rejects_asymmetric_zero_pattern():
    with pytest.raises(InvalidCartan):
        CartanMatrix([[2, 0], [-1, 2]])


def test_rejects_non_integer_entries():
    with pytest.raises(InvalidCartan):
        CartanMatrix([[2, -1.0], [-1, 2]])


def test_affine_matrix_is_not_finite():
    with pytest.raises(NotFiniteType):
        build_root_system([[2, -2], [-2, 2]])


def test_rank_one_affine_like_with_deep_edge():
    with pytest.raises(NotFiniteType):
        build_root_system([[2, -4], [-1, 2]])


def test_cap_exceeded_reports_not_finite():
    with pytest.raises(NotFiniteType):
        build_root_system(cartan_matrix("B", 2), cap=1)


def test_simple_root_ordinals_and_negation():
    rs = system("A", 3)
    for i in range(1, 4):
        assert rs.ordinal(rs.simple_root(i)) == i - 1
    for k in range(len(rs.roots)):
        assert rs.root(rs.negate_ordinal(k)) == -rs.root(k)
        assert rs.negate_ordinal(rs.negate_ordinal(k)) == k
    assert all(rs.is_positive_ordinal(k) == rs.root(k).is_positive()
               for k in range(len(rs.roots)))


def test_positive_roots_sorted_by_height():
    rs = system("B", 3)
    heights = [r.height for r in rs.positive_roots]
    assert heights == sorted(heights)


@pytest.mark.parametrize("family,rank,count", [
    ("A", 1, 1), ("A", 2, 3), ("A", 3, 6), ("A", 4, 10), ("A", 5, 15),
    ("B", 2, 4), ("B", 3, 9), ("B", 4, 16),
    ("C", 2, 4), ("C", 3, 9), ("C", 4, 16),
    ("D", 3, 6), ("D", 4, 12), ("D", 5, 20),
])
def test_positive_root_counts(family, rank, count):
    assert system(family, rank).n_positive == count


def test_exceptional_rank_two_matrix():
    rs = build_root_system(G2_CARTAN)
    assert rs.n_positive == 6


def test_direct_sum_counts():
    rs = build_root_system(direct_sum(cartan_matrix("A", 2), [[2]]))
    assert rs.n_positive == 4
    assert rs.rank == 3


def test_rank_zero_system():
    rs = build_root_system([])
    assert rs.rank == 0 and rs.n_positive == 0


def test_reflection_is_involution():
    rs = system("B", 2)
    for i in (1, 2):
        for r in rs.roots:
            assert rs.reflect(i, rs.reflect(i, r)) == r


def test_reflection_permutes_other_positives():
    rs = system("A", 3)
    for i in (1, 2, 3):
        alpha = rs.simple_root(i)
        others = {r for r in rs.positive_roots if r != alpha}
        assert {rs.reflect(i, r) for r in others} == others
        assert rs.reflect(i, alpha) == -alpha


def test_reflect_rejects_non_roots():
    rs = system("A", 2)
    with pytest.raises(RootNotInSystem):
        rs.reflect(1, Root((2, 0)))


def test_subsystem_and_outside():
    rs = system("A", 2)
    sub = rs.subsystem({1})
    assert sub == {rs.simple_root(1), -rs.simple_root(1)}
    assert len(rs.positive_outside({1})) == 2
    assert len(rs.positive_outside(set())) == 3
    assert len(rs.positive_outside({1, 2})) == 0


def test_cartan_entry_orientation():
    c = cartan_matrix("B", 2)
    assert c.entry(2, 1) == -2
    assert c.entry(1, 2) == -1
    rs = build_root_system(c)
    assert Root((1, 2)) in set(rs.positive_roots)


def test_family_rank_bounds():
    with pytest.raises(InvalidCartan):
        cartan_matrix("D", 2)
    with pytest.raises(InvalidCartan):
        cartan_matrix("E", 6)
