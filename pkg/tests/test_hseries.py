import itertools

import pytest

from detlevel.degree_matrix import enumerate_matrices, validate
from detlevel.hseries import (
    binom,
    ci_hpoly,
    flawless_violation,
    h_closed,
    h_recursive,
    is_flawless,
    is_log_concave,
    is_osequence,
    last_entry,
    macaulay_bound,
    tail_equal_rows,
    tau,
    validate_hvector,
)

from _examples import ALL_SIX, MATRIX_ZERO


def small_family(max_tc, max_entry, zero_free):
    for t in range(1, max_tc):
        for c in range(1, max_tc + 1 - t):
            yield from enumerate_matrices(t, c, max_entry, zero_free=zero_free)


def test_binom_convention():
    assert binom(4, 2) == 6
    assert binom(3, 0) == 1
    assert binom(2, 3) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0


def test_validate_hvector():
    assert validate_hvector([1, 2, 1]) == (1, 2, 1)
    for bad in ([], [2], [1, -1, 1], [1, 1, 0]):
        with pytest.raises(ValueError):
            validate_hvector(bad)


def naive_ci(degrees):
    """Oracle: count tuples (e_1, ..., e_k) with 0 <= e_j < d_j by total."""
    counts = {}
    for es in itertools.product(*(range(d) for d in degrees)):
        counts[sum(es)] = counts.get(sum(es), 0) + 1
    return tuple(counts[i] for i in range(max(counts) + 1))


@pytest.mark.parametrize("degrees", [(1,), (3,), (2, 2), (3, 3, 3, 3), (1, 4, 2)])
def test_ci_hpoly_against_counting(degrees):
    assert ci_hpoly(degrees) == naive_ci(degrees)


def test_ci_hpoly_edges():
    assert ci_hpoly(()) == (1,)
    assert ci_hpoly((1, 1, 1)) == (1,)
    with pytest.raises(ValueError):
        ci_hpoly((2, 0))


@pytest.mark.parametrize("name,matrix,h", ALL_SIX)
def test_h_recursive_examples(name, matrix, h):
    A = validate(matrix)
    assert h_recursive(A) == h
    assert h_recursive(A, pivot="top-left") == h


@pytest.mark.parametrize("name,matrix,h", ALL_SIX)
def test_h_closed_examples(name, matrix, h):
    assert h_closed(validate(matrix)) == h


def test_h_base_cases():
    # one row: a complete intersection in the row degrees
    assert h_recursive(validate([[2, 3]])) == ci_hpoly((2, 3))
    # one column (c = 1): all ones of length trace
    assert h_recursive(validate([[2, 2], [1, 1]])) == (1, 1, 1)
    assert h_recursive(validate([[3]])) == (1, 1, 1)


def test_h_with_zeros_matches_reduction():
    A = validate(MATRIX_ZERO)
    assert h_recursive(A) == h_recursive(validate([[2, 2]])) == (1, 2, 1)
    assert h_closed(A) == (1, 2, 1)


def test_h_bad_pivot():
    with pytest.raises(ValueError):
        h_recursive(validate([[2, 2]]), pivot="middle")


def test_closed_equals_recursive_with_zeros():
    for A in small_family(5, 3, zero_free=False):
        expected = h_recursive(A)
        assert h_closed(A) == expected, A.entries
        assert h_recursive(A, pivot="top-left") == expected, A.entries


def test_tau_and_last_entry():
    assert tau(validate([[4]])) == 3
    assert tau(validate([[3, 3, 3, 3], [1, 1, 1, 1]])) == 7
    assert tau(validate([[2, 2, 5, 5, 5], [2, 2, 5, 5, 5],
                         [-2, -2, 1, 1, 1], [-2, -2, 1, 1, 1]])) == 9
    for A in small_family(5, 3, zero_free=False):
        h = h_recursive(A)
        assert tau(A) == len(h) - 1, A.entries
        assert last_entry(A) == h[-1], A.entries


def test_tail_examples():
    one_row = validate([[2, 2]])
    assert tail_equal_rows(one_row, 0) == 1
    assert tail_equal_rows(one_row, 1) == 2  # h = (1, 2, 1)
    two_rows = validate([[1, 1, 2], [1, 1, 2]])
    assert tail_equal_rows(two_rows, 0) == 2  # h = (1, 2, 2)
    with pytest.raises(IndexError):
        tail_equal_rows(two_rows, 2)  # legal range is 0..a_{r+1}-1 = 0..1
    with pytest.raises(ValueError):
        tail_equal_rows(validate([[2, 2, 2], [1, 1, 1]]), 0)


def test_tail_codim_one():
    A = validate([[2, 2], [2, 2]])  # c = 1, h = (1, 1, 1, 1)
    for i in range(4):
        assert tail_equal_rows(A, i) == 1
    with pytest.raises(IndexError):
        tail_equal_rows(A, 4)


def test_tail_matches_h_small_family():
    for r in range(1, 4):
        for c in range(1, 4):
            for row in itertools.combinations_with_replacement(range(1, 4), r + c - 1):
                A = validate([list(row)] * r)
                h = h_recursive(A)
                s = len(h) - 1
                top = s if c == 1 else row[r] - 1
                for i in range(top + 1):
                    assert tail_equal_rows(A, i) == h[s - i], (row, r, c, i)


def test_log_concavity():
    assert not is_log_concave((1, 1, 2))
    assert is_log_concave((1, 2, 1))
    assert is_log_concave((1,))
    got = {name: is_log_concave(h) for name, _, h in ALL_SIX}
    assert got == {
        "A": False, "B": False, "A45": False, "B45": False, "C": True, "D": True,
    }


def test_flawless():
    assert flawless_violation((1, 2, 3, 4, 5, 3, 3, 3, 2)) == 3
    assert flawless_violation((1, 2, 3, 4, 3, 3, 3, 2)) == 3
    assert flawless_violation((1, 3, 6, 10, 9, 7, 3, 1)) == 3
    assert is_flawless((1, 2, 3, 4, 5, 6, 4, 4, 4, 2))
    assert is_flawless((1, 3, 6, 4, 1))
    assert is_flawless((1,))


def lex_growth(n, i):
    """Oracle for the Macaulay bound: degree-(i+1) count of the quotient by
    the lex ideal whose degree-i complement is the n lex-smallest monomials
    (n variables always suffice to realize n monomials in degree i).
    """
    v = max(n, 1)
    mons = sorted(
        (e for e in itertools.product(range(i + 1), repeat=v) if sum(e) == i),
        reverse=True,
    )
    ideal = mons[: len(mons) - n]  # everything above the lex-smallest n
    up = set()
    for e in ideal:
        for j in range(v):
            up.add(e[:j] + (e[j] + 1,) + e[j + 1 :])
    total = binom(v + i, i + 1)
    return total - len(up)


def test_macaulay_bound_against_lex_oracle():
    for i in range(1, 5):
        for n in range(0, 13):
            assert macaulay_bound(n, i) == lex_growth(n, i), (n, i)


def test_macaulay_bound_examples_and_errors():
    assert macaulay_bound(2, 1) == 3
    assert macaulay_bound(3, 2) == 4
    assert macaulay_bound(0, 3) == 0
    with pytest.raises(ValueError):
        macaulay_bound(2, 0)
    with pytest.raises(ValueError):
        macaulay_bound(-1, 1)


def test_is_osequence():
    assert is_osequence((1, 3, 6, 10))
    assert not is_osequence((1, 2, 4))
    assert not is_osequence((1, 1, 2))
    assert not is_osequence((2, 1))
    assert is_osequence((1,))


def test_determinantal_h_are_osequences():
    # Hilbert functions of graded quotients always satisfy Macaulay growth
    for A in small_family(5, 3, zero_free=False):
        assert is_osequence(h_recursive(A)), A.entries
