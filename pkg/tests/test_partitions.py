import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from doublehurwitz.errors import SizeMismatch
from doublehurwitz.partitions import (BorderStrip, FrobeniusCoordinates, HurwitzInput, Partition,
                                      border_strips, central_character_f2, character,
                                      character_column, conjugacy_class_size, dimension,
                                      f2_from_frobenius, from_frobenius, frobenius_coords,
                                      hurwitz_oracle, is_on_wall, partitions_of, vanishing_walls)

from oracles import (all_partitions, brute_hurwitz, central_character_by_permutations,
                     frobenius_character, hook_dimension, partition_count)

H = Fraction(1, 2)


@st.composite
def partitions(draw, max_size=10, min_size=0):
    d = draw(st.integers(min_size, max_size))
    return draw(st.sampled_from(partitions_of(d)))


# -- Partition ------------------------------------------------------------

def test_partition_sorts_and_flags():
    p = Partition([1, 3, 2])
    assert tuple(p) == (3, 2, 1)
    assert p.reordered
    assert not Partition([3, 2, 1]).reordered
    assert p.size == 6 and p.length == 3


def test_partition_rejects_nonpositive():
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_empty_partition():
    assert Partition().size == 0
    assert partitions_of(0) == [Partition()]


@given(partitions())
def test_partition_invariants(lam):
    assert all(a >= b >= 1 for a, b in zip(lam, lam[1:]))
    assert lam.size == sum(lam)
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@pytest.mark.parametrize("d, count", [(4, 5), (8, 22)])
def test_partition_counts_examples(d, count):
    assert len(partitions_of(d)) == count == partition_count(d)


@given(st.integers(0, 18))
def test_partition_count_matches_pentagonal_recurrence(d):
    ps = partitions_of(d)
    assert len(ps) == partition_count(d)
    assert len(set(ps)) == len(ps)
    assert all(p.size == d for p in ps)


def test_partitions_lexicographically_descending():
    ps = [tuple(p) for p in partitions_of(7)]
    assert ps == sorted(ps, reverse=True)
    assert ps == list(all_partitions(7))


# -- Frobenius coordinates ---------------------------------------------------

def test_frobenius_examples():
    empty = frobenius_coords(())
    assert empty.electrons == () and empty.positrons == ()
    c = frobenius_coords((3, 2, 2))
    assert c.electrons == (5 * H, H)
    assert c.positrons == (5 * H, 3 * H)
    c = frobenius_coords((2,))
    assert c.electrons == (3 * H,) and c.positrons == (H,)
    assert c.total == 2


def test_frobenius_validation():
    with pytest.raises(ValueError):
        FrobeniusCoordinates((H,), ())
    with pytest.raises(ValueError):
        FrobeniusCoordinates((Fraction(1),), (H,))
    with pytest.raises(ValueError):
        FrobeniusCoordinates((H, 3 * H), (H, 3 * H))


@given(partitions(max_size=12))
def test_frobenius_round_trip_and_total(lam):
    c = frobenius_coords(lam)
    assert c.total == lam.size
    assert from_frobenius(c) == lam


# -- characters -------------------------------------------------------------

def test_character_examples():
    assert character((2, 1), (3,)) == -1
    assert character((2, 2), (2, 1, 1)) == 0
    for mu in partitions_of(5):
        assert character((5,), mu) == 1


def test_character_size_mismatch():
    with pytest.raises(SizeMismatch):
        character((2, 1), (2,))


@pytest.mark.parametrize("d", range(1, 8))
def test_character_table_matches_frobenius_formula(d):
    for lam in partitions_of(d):
        for mu in partitions_of(d):
            assert character(lam, mu) == frobenius_character(tuple(lam), tuple(mu))


@pytest.mark.parametrize("d", range(1, 7))
def test_column_orthogonality(d):
    ps = partitions_of(d)
    for mu in ps:
        for nu in ps:
            s = sum(character(lam, mu) * character(lam, nu) for lam in ps)
            if mu == nu:
                assert s == math.factorial(d) // conjugacy_class_size(mu)
            else:
                assert s == 0


@pytest.mark.parametrize("d", range(0, 9))
def test_class_sizes_sum_to_group_order(d):
    assert sum(conjugacy_class_size(mu) for mu in partitions_of(d)) == math.factorial(d)


@pytest.mark.parametrize("d", range(1, 7))
def test_dimension_is_hook_length_count(d):
    for lam in partitions_of(d):
        assert character(lam, (1,) * d) == hook_dimension(tuple(lam)) == dimension(lam)


@given(partitions(max_size=9, min_size=1))
def test_character_column_matches_pointwise(mu):
    col = character_column(mu)
    for lam in partitions_of(mu.size):
        assert col.get(lam, 0) == character(lam, mu)


@given(partitions(max_size=10, min_size=1), st.integers(1, 5))
def test_border_strip_removal_gives_partition(lam, k):
    for strip, rest in border_strips(lam, k):
        assert isinstance(strip, BorderStrip)
        assert rest.size == lam.size - k
        assert all(a >= b for a, b in zip(lam + (0,) * 10, rest + (0,) * 20))
        assert strip.sign in (1, -1)


# -- central character ----------------------------------------------------------

def test_central_character_examples():
    assert central_character_f2((1,)) == 0
    assert central_character_f2((2,)) == 1
    assert central_character_f2((1, 1)) == -1
    assert central_character_f2((3, 2, 2)) == -1
    assert f2_from_frobenius((2,)) == Fraction(3, 2) ** 2 / 2 - H ** 2 / 2 == 1


@pytest.mark.parametrize("d", range(2, 8))
def test_central_character_definition_small(d):
    for lam in partitions_of(d):
        assert central_character_f2(lam) == central_character_by_permutations(tuple(lam))


@pytest.mark.parametrize("d", range(2, 9))
def test_central_character_definition(d):
    transposition = (2,) + (1,) * (d - 2)
    size = conjugacy_class_size(transposition)
    for lam in partitions_of(d):
        value = Fraction(size * character(lam, transposition), hook_dimension(tuple(lam)))
        assert central_character_f2(lam) == value


@given(partitions(max_size=12))
def test_frobenius_f2_equals_content_sum(lam):
    assert f2_from_frobenius(lam) == central_character_f2(lam)


# -- Hurwitz oracle --------------------------------------------------------------

def test_oracle_examples():
    assert hurwitz_oracle(HurwitzInput((1,), (1,)), 0) == 1
    for r in range(1, 5):
        assert hurwitz_oracle(HurwitzInput((1,), (1,)), r) == 0
    assert hurwitz_oracle(HurwitzInput((2,), (1, 1)), 1) == 1


def test_oracle_size_mismatch():
    with pytest.raises(SizeMismatch):
        HurwitzInput((2,), (1,))


@pytest.mark.parametrize("d", range(1, 5))
def test_oracle_matches_permutation_count(d):
    for mu in partitions_of(d):
        for nu in partitions_of(d):
            for r in range(0, 4):
                assert hurwitz_oracle(HurwitzInput(mu, nu), r) == brute_hurwitz(tuple(mu), tuple(nu), r)


@given(partitions(max_size=8, min_size=1), partitions(max_size=8, min_size=1), st.integers(0, 5))
def test_oracle_sparse_equals_full(mu, nu, r):
    if mu.size != nu.size:
        return
    inp = HurwitzInput(mu, nu)
    assert hurwitz_oracle(inp, r) == hurwitz_oracle(inp, r, method="full")


def test_oracle_symmetric_and_order_free():
    a = hurwitz_oracle(HurwitzInput((3, 1, 2), (4, 2)), 3)
    assert a == hurwitz_oracle(HurwitzInput((4, 2), (1, 2, 3)), 3)


# -- input and walls ----------------------------------------------------------------

def test_hurwitz_input_fields():
    inp = HurwitzInput((2, 5), (4, 3))
    assert inp.d == 7 and inp.m == 2 and inp.n == 2
    assert inp.reordered
    assert inp.sorted().mu == (5, 2)
    assert inp.r_for_genus(1) == 4
    assert inp.genus_for_r(4) == 1
    with pytest.raises(ValueError):
        inp.genus_for_r(3)


def test_is_on_wall_examples():
    assert is_on_wall(HurwitzInput((2, 1), (2, 1)))
    assert (frozenset({1}), frozenset({1})) in vanishing_walls(HurwitzInput((2, 1), (2, 1)))
    assert not is_on_wall(HurwitzInput((5, 2), (4, 3)))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_one_part_never_on_wall(nu):
    assert not is_on_wall(HurwitzInput((sum(nu),), tuple(nu)))
