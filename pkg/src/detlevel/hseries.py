"""h-vectors of standard determinantal schemes, exactly.

Everything here is integer arithmetic on coefficient tuples.  The h-vector
of the scheme cut out by the maximal minors of a matrix with degree matrix
A is computed two independent ways: a recursion that splits A at a pivot
entry, and a closed summation formula.  Their agreement is a test oracle,
not an assumption.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Optional

from .degree_matrix import DegreeMatrix, canonical_key, max_equal_rows, submatrix

HVector = tuple[int, ...]


def binom(a: int, b: int) -> int:
    """Binomial coefficient with binom(a, b) = 0 whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def validate_hvector(h: Iterable[int]) -> HVector:
    """Check h is a plausible h-vector: h_0 = 1, nonnegative, positive last entry."""
    hv = tuple(int(x) for x in h)
    if not hv or hv[0] != 1:
        raise ValueError("h-vector must start with h_0 = 1")
    if any(x < 0 for x in hv):
        raise ValueError("h-vector entries must be nonnegative")
    if hv[-1] <= 0:
        raise ValueError("h-vector must end with a positive entry")
    return hv


# ---------------------------------------------------------------------------
# polynomial helpers (dense nonnegative-integer coefficient lists)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return out


def _poly_shift(p: list[int], e: int) -> list[int]:
    return [0] * e + p


def ci_hpoly(degrees: Iterable[int]) -> HVector:
    """h-vector of a complete intersection of the given positive degrees:
    the coefficients of prod_j (1 + z + ... + z^(d_j - 1)).

    The empty product gives (1,).
    """
    out = [1]
    for d in degrees:
        if d < 1:
            raise ValueError(f"complete intersection degrees must be positive, got {d}")
        out = _poly_mul(out, [1] * d)
    return tuple(out)


# ---------------------------------------------------------------------------
# the h-vector of a degree matrix


def _first_zero(A: DegreeMatrix) -> Optional[tuple[int, int]]:
    for i in range(A.t):
        for j in range(A.ncols):
            if A.entries[i][j] == 0:
                return (i + 1, j + 1)
    return None


def h_recursive(A: DegreeMatrix, pivot: str = "bottom-right") -> HVector:
    """h-vector by the pivot recursion.

    For a zero-free matrix with t >= 2 and c >= 2 pick the pivot entry
    a = a_kl and split

        h(A) = z^a * h(A minus row k, column l)
             + (1 + z + ... + z^(a-1)) * h(A minus column l),

    where the first term keeps the codimension and the second drops it by
    one.  A zero entry is deleted (with its row and column) before
    pivoting; this leaves the h-vector unchanged.  Base cases: c = 1 gives
    (1, ..., 1) of length trace(A), and t = 1 gives ci_hpoly(first row).

    The default pivot is the bottom-right entry (t, t+c-1); pivot
    "top-left" uses (1, 1).  Both are always positive, and the result is
    pivot-independent.
    """
    if pivot not in ("bottom-right", "top-left"):
        raise ValueError(f"unknown pivot rule {pivot!r}")
    return tuple(_h_rec(A, pivot, {}))


def _h_rec(A: DegreeMatrix, pivot: str, memo: dict) -> list[int]:
    key = canonical_key(A)
    cached = memo.get(key)
    if cached is not None:
        return cached
    t, c = A.t, A.c
    if c == 1:
        h = [1] * sum(A.entries[i][i] for i in range(t))
    elif t == 1:
        h = list(ci_hpoly(A.entries[0]))
    else:
        zero = _first_zero(A)
        if zero is not None:
            h = _h_rec(submatrix(A, zero[0], zero[1]), pivot, memo)
        else:
            k, l = (t, t + c - 1) if pivot == "bottom-right" else (1, 1)
            a = A[k, l]
            same_codim = _h_rec(submatrix(A, k, l), pivot, memo)
            drop_codim = _h_rec(submatrix(A, 0, l), pivot, memo)
            h = _poly_add(_poly_shift(same_codim, a), _poly_mul([1] * a, drop_codim))
    memo[key] = h
    return h


def h_closed(A: DegreeMatrix) -> HVector:
    """h-vector by the closed summation formula.

    Zeros are first reduced away (they do not change the h-vector).  Then,
    writing b = c - 1 and m = t + c - 1, the sum runs over all selectors
    0 < i_1 < ... < i_b < m.  Each selector contributes z^e * ci_hpoly(g)
    where, with {j_1 < ... < j_(i_b - b)} = {1..i_b} minus the selector,

        e = sum_i a_(i, j_i),
        g = (a_(i_1, i_1), a_(i_2 - 1, i_2), ..., a_(i_b - b + 1, i_b),
             sum_(i = i_b - b + 1)^t a_(i, i + b)).

    Every entry referenced by g lies on or above the diagonal, so g is
    positive.  For c = 1 the empty selector contributes ci_hpoly((trace,)).
    """
    from .degree_matrix import reduce_zeros

    A = reduce_zeros(A)
    t, c = A.t, A.c
    m = t + c - 1
    b = c - 1
    total: list[int] = [0]
    for sel in itertools.combinations(range(1, m), b):
        ib = sel[-1] if sel else 0
        free = sorted(set(range(1, ib + 1)) - set(sel))
        e = sum(A[i, j] for i, j in enumerate(free, start=1))
        g = [A[sel[nu - 1] - (nu - 1), sel[nu - 1]] for nu in range(1, b + 1)]
        g.append(sum(A[i, i + b] for i in range(ib - b + 1, t + 1)))
        term = _poly_shift(list(ci_hpoly(g)), e)
        total = _poly_add(total, term)
    return tuple(total)


def tau(A: DegreeMatrix) -> int:
    """Degree of the h-vector: a_11 + ... + a_1c + a_(2,c+1) + ... + a_(t,t+c-1) - c.

    All referenced entries lie on or above the diagonal, and the value is
    invariant under zero reduction, so this equals len(h) - 1 for every
    valid matrix.
    """
    c = A.c
    return sum(A[1, j] for j in range(1, c + 1)) + sum(
        A[i, i + c - 1] for i in range(2, A.t + 1)
    ) - c


def last_entry(A: DegreeMatrix) -> int:
    """The last h-vector entry: binom(r+c-2, c-1) with r = max_equal_rows(A)."""
    return binom(max_equal_rows(A) + A.c - 2, A.c - 1)


def tail_equal_rows(A: DegreeMatrix, i: int) -> int:
    """h_(s-i) of an equal-rows matrix by inclusion-exclusion, s = tau(A).

    A must be r x (r+c-1) with all rows equal; write (a_1, ..., a_(r+c-1))
    for the common row.  For c >= 2 the formula is valid for
    0 <= i <= a_(r+1) - 1:

        h_(s-i) = binom(r+c-2, c-1) * binom(c+i-1, c-1)
                + sum_(alpha=1)^(c-1) (-1)^alpha * binom(r-alpha+c-2, c-1-alpha)
                  * sum_(j_1 < ... < j_alpha <= r) binom(c+i-1 - a_j1 - ... - a_jalpha, c-1).

    For c = 1 the h-vector is all ones and any 0 <= i <= s is legal.
    """
    r, c = A.t, A.c
    if max_equal_rows(A) != r:
        raise ValueError("tail_equal_rows requires all rows equal")
    row = A.entries[0]
    s = tau(A)
    if c == 1:
        if not 0 <= i <= s:
            raise IndexError(f"index {i} outside legal range 0..{s}")
        return 1
    if not 0 <= i <= row[r] - 1:
        raise IndexError(f"index {i} outside legal range 0..{row[r] - 1}")
    value = binom(r + c - 2, c - 1) * binom(c + i - 1, c - 1)
    for alpha in range(1, c):
        sub = sum(
            binom(c + i - 1 - sum(row[j - 1] for j in js), c - 1)
            for js in itertools.combinations(range(1, r + 1), alpha)
        )
        value += (-1) ** alpha * binom(r - alpha + c - 2, c - 1 - alpha) * sub
    return value


# ---------------------------------------------------------------------------
# numeric predicates on h-vectors


def is_log_concave(h: Iterable[int]) -> bool:
    """True when h_i^2 >= h_(i-1) * h_(i+1) for all interior i."""
    hv = tuple(h)
    return all(hv[i] ** 2 >= hv[i - 1] * hv[i + 1] for i in range(1, len(hv) - 1))


def flawless_violation(h: Iterable[int]) -> Optional[int]:
    """Smallest i <= s/2 with h_i > h_(s-i), or None when h is flawless."""
    hv = tuple(h)
    s = len(hv) - 1
    for i in range(1, s // 2 + 1):
        if hv[i] > hv[s - i]:
            return i
    return None


def is_flawless(h: Iterable[int]) -> bool:
    return flawless_violation(h) is None


def macaulay_bound(n: int, i: int) -> int:
    """Maximal growth n^<i> allowed in degree i+1 from value n in degree i >= 1.

    Uses the greedy i-th Macaulay representation
    n = binom(a_i, i) + binom(a_(i-1), i-1) + ... + binom(a_j, j) with
    a_i > a_(i-1) > ... > a_j >= j >= 1, then bumps every top and bottom
    argument by one.
    """
    if i < 1:
        raise ValueError("macaulay_bound needs degree i >= 1")
    if n < 0:
        raise ValueError("macaulay_bound needs n >= 0")
    if n == 0:
        return 0
    bound = 0
    k = i
    while n > 0:
        a = k
        while math.comb(a + 1, k) <= n:
            a += 1
        bound += math.comb(a + 1, k + 1)
        n -= math.comb(a, k)
        k -= 1
    return bound


def is_osequence(h: Iterable[int]) -> bool:
    """Macaulay growth test: h_0 = 1 and h_(i+1) <= h_i^<i> for all i >= 1."""
    hv = tuple(h)
    if not hv or hv[0] != 1 or any(x < 0 for x in hv):
        return False
    return all(hv[i + 1] <= macaulay_bound(hv[i], i) for i in range(1, len(hv) - 1))
