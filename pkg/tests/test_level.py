import itertools

import pytest

from detlevel.degree_matrix import enumerate_matrices, validate
from detlevel.hseries import binom, h_recursive, tau
from detlevel.level import NotLevel, is_level, level_type, socle_shifts
from detlevel.pure_osequence import PreconditionFailed

from _examples import MATRIX_C, MATRIX_D, MATRIX_ZERO


def test_socle_shifts_examples():
    assert socle_shifts(validate(MATRIX_C)).shifts == (6, 8, 10)
    assert socle_shifts(validate([[2, 3]])).shifts == (5,)
    # c = 1: the single shift is the trace
    assert socle_shifts(validate([[3, 3], [2, 2]])).shifts == (5,)


def test_socle_shifts_structure():
    shifts = socle_shifts(validate(MATRIX_C))
    assert shifts.rank == 3
    assert not shifts.all_equal
    for t in range(1, 4):
        for c in range(1, 4):
            for A in enumerate_matrices(t, c, 3):
                got = socle_shifts(A)
                assert got.rank == binom(t + c - 2, c - 1)
                assert max(got.shifts) == tau(A) + c
                assert got.shifts == tuple(sorted(got.shifts))


def test_socle_shifts_need_zero_free():
    with pytest.raises(PreconditionFailed):
        socle_shifts(validate(MATRIX_ZERO))


def test_is_level():
    assert is_level(validate([[2, 2]]))
    assert is_level(validate([[1, 2, 2], [1, 2, 2]]))
    assert not is_level(validate(MATRIX_C))
    assert not is_level(validate(MATRIX_D))
    # codimension 1 is always level, even with unequal rows
    assert is_level(validate([[3, 3], [2, 2]]))


def test_level_type():
    assert level_type(validate([[2, 2]])) == (2, 1)
    assert level_type(validate([[1, 1, 1], [1, 1, 1]])) == (1, 2)
    A = validate([[1, 1, 1, 1]] * 3)
    assert h_recursive(A) == (1, 2, 3)
    assert level_type(A) == (2, 3)
    with pytest.raises(NotLevel):
        level_type(validate(MATRIX_C))


def test_level_iff_equal_rows_small():
    for t in range(1, 4):
        for c in range(2, 4):
            for A in enumerate_matrices(t, c, 3):
                equal = A.entries.count(A.entries[0]) == t
                assert is_level(A) == equal, A.entries


def test_level_type_matches_h():
    for r in range(1, 4):
        for c in range(1, 4):
            for row in itertools.combinations_with_replacement(range(1, 4), r + c - 1):
                A = validate([list(row)] * r)
                degree, cm = level_type(A)
                h = h_recursive(A)
                assert degree == len(h) - 1
                assert cm == h[-1]
