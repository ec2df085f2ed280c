import pytest

from qtcatalan import (
    Cell,
    CellClass,
    StatTriple,
    UnsupportedM,
    area,
    classify_nondinv_cell,
    contributes_to_dinv,
    dinv,
    enumerate_paths,
    make_path,
    mark_from_path,
    shape_cells,
    skips,
    stat_triple,
    transpose,
)

import oracles

PI1 = make_path(3, 8, [6, 6, 8])
PI2 = make_path(3, 8, [7, 7, 8])


def test_area_of_worked_examples():
    assert area(PI1) == 3
    assert area(PI2) == 5


def test_area_of_single_column_paths_is_zero():
    for n in (1, 2, 5, 9):
        assert area(make_path(1, n, [n])) == 0


def test_area_maximum_is_half_the_lattice():
    for m, n in [(3, 5), (4, 7), (5, 3)]:
        top = make_path(m, n, [n] * m)
        assert area(top) == (m - 1) * (n - 1) // 2
        assert all(area(p) <= area(top) for p in enumerate_paths(m, n))


def test_area_matches_cell_oracle():
    for m, n in [(2, 5), (3, 4), (3, 5), (4, 7), (5, 3), (7, 2)]:
        for p in enumerate_paths(m, n):
            assert area(p) == oracles.area_by_cells(m, n, p.east_heights)


def test_area_equals_unboxed_entry_count_for_three_columns():
    for n in range(1, 17):
        if n % 3 == 0:
            continue
        for p in enumerate_paths(3, n):
            word = mark_from_path(p)
            assert area(p) == len(word) - len(word.boxed)


def test_dinv_of_worked_examples():
    assert dinv(PI1) == 2
    assert dinv(PI2) == 1


def test_cell_with_zero_arm_and_leg_always_contributes():
    p = make_path(3, 4, [3, 4, 4])  # single cell above, arm 0 leg 0
    assert contributes_to_dinv(p, Cell(1, 4))


def test_dinv_matches_fraction_oracle():
    for m, n in [(2, 5), (3, 4), (3, 5), (3, 8), (4, 7), (5, 3)]:
        for p in enumerate_paths(m, n):
            assert dinv(p) == oracles.dinv_by_cells(m, n, p.east_heights)


def test_skips_of_worked_examples():
    assert skips(PI1) == 2
    assert skips(PI2) == 1
    assert skips(make_path(3, 8, [8, 8, 8])) == 0


def test_skips_needs_three_columns():
    with pytest.raises(UnsupportedM):
        skips(make_path(2, 5, [3, 5]))


def test_stat_triples_of_worked_examples():
    assert stat_triple(PI1) == StatTriple(3, 2, 2)
    assert stat_triple(PI2) == StatTriple(5, 1, 1)


def test_stat_triple_of_the_empty_shape_path():
    for n in (4, 7, 10):
        assert stat_triple(make_path(3, n, [n, n, n])) == StatTriple(n - 1, 0, 0)


def test_statistics_sum_to_word_length():
    for n in range(1, 17):
        if n % 3 == 0:
            continue
        for p in enumerate_paths(3, n):
            a, s, d = stat_triple(p)
            assert a + s + d == n - 1


def test_triples_are_distinct_within_one_lattice():
    for n in range(1, 32):
        if n % 3 == 0:
            continue
        triples = [stat_triple(p) for p in enumerate_paths(3, n)]
        assert len(triples) == len(set(triples))


def test_transpose_preserves_area_and_dinv():
    pairs = [(3, n) for n in range(1, 17) if n % 3] + [(4, 7), (5, 2)]
    for m, n in pairs:
        for p in enumerate_paths(m, n):
            q = transpose(p)
            assert area(q) == area(p)
            assert dinv(q) == dinv(p)


def test_second_column_cells_contribute():
    for p in enumerate_paths(3, 8):
        for x in shape_cells(p):
            if x.column == 2:
                assert classify_nondinv_cell(p, x) is CellClass.CONTRIBUTES


def test_classification_of_a_short_leg_cell():
    # (1,8) above PI2 has arm 1 and leg 0 < 8/3 - 1
    assert classify_nondinv_cell(PI2, Cell(1, 8)) is CellClass.ARM1_SHORT_LEG


def test_classification_of_a_long_leg_cell():
    # heights (3,8,8): cell (1,8) has arm 0 and leg 4 > 8/3
    p = make_path(3, 8, [3, 8, 8])
    assert classify_nondinv_cell(p, Cell(1, 8)) is CellClass.ARM0_LONG_LEG


def test_classification_is_exclusive_and_counts_skips():
    for n in range(1, 13):
        if n % 3 == 0:
            continue
        for p in enumerate_paths(3, n):
            fenced = 0
            for x in shape_cells(p):
                label = classify_nondinv_cell(p, x)
                assert contributes_to_dinv(p, x) == (label is CellClass.CONTRIBUTES)
                fenced += label is not CellClass.CONTRIBUTES
            assert fenced == skips(p)


def test_classification_needs_three_columns():
    with pytest.raises(UnsupportedM):
        classify_nondinv_cell(make_path(2, 5, [3, 5]), Cell(1, 4))
