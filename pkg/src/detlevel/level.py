"""Levelness of standard determinantal schemes via socle shifts.

The last module of the minimal free resolution of the coordinate ring is
a direct sum of binom(t+c-2, c-1) twists, one per multiset
1 <= k_1 <= ... <= k_(c-1) <= t, with shift

    a_(k_1, 1) + a_(k_2, 2) + ... + a_(k_(c-1), c-1)
        + a_(1, c) + a_(2, c+1) + ... + a_(t, t+c-1).

The scheme is level exactly when all shifts coincide which, for c >= 2,
happens exactly when all rows of A are equal.  Codimension 1 is a
hypersurface and always level.

These formulas describe the minimal resolution only when A is zero-free
(a zero entry is a constant matrix entry, which the presentation would
cancel); pass reduce_zeros(A) for matrices with zeros.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .degree_matrix import DegreeMatrix, max_equal_rows
from .hseries import binom, h_recursive, tau
from .pure_osequence import PreconditionFailed


class NotLevel(ValueError):
    """Raised when level_type is asked of a non-level scheme."""


@dataclass(frozen=True)
class SocleShifts:
    """The multiset of socle shifts, sorted ascending.

    len(shifts) = binom(t+c-2, c-1) and max(shifts) = tau(A) + c always;
    all entries coincide exactly in the level case.
    """

    shifts: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.shifts)

    @property
    def all_equal(self) -> bool:
        return len(set(self.shifts)) == 1


def socle_shifts(A: DegreeMatrix) -> SocleShifts:
    """All socle shifts of the resolution's last module.  Needs a zero-free A."""
    if not A.zero_free:
        raise PreconditionFailed(
            "socle shifts describe the minimal resolution only for zero-free "
            "matrices; apply reduce_zeros first"
        )
    t, c = A.t, A.c
    base = sum(A[i, i + c - 1] for i in range(1, t + 1))
    shifts = sorted(
        base + sum(A[k, j] for j, k in enumerate(ks, start=1))
        for ks in itertools.combinations_with_replacement(range(1, t + 1), c - 1)
    )
    result = SocleShifts(shifts=tuple(shifts))
    if result.rank != binom(t + c - 2, c - 1):
        raise AssertionError("socle shift count disagrees with binom(t+c-2, c-1)")
    if max(shifts) != tau(A) + c:
        raise AssertionError("largest socle shift disagrees with tau(A) + c")
    return result


def is_level(A: DegreeMatrix) -> bool:
    """True when all socle shifts coincide.  Needs a zero-free A.

    For c >= 2 this is equivalent to all rows of A being equal, and that
    equivalence is cross-checked at runtime; for c = 1 the scheme is a
    hypersurface and is always level, whatever the rows.
    """
    level = socle_shifts(A).all_equal
    if A.c >= 2 and level != (max_equal_rows(A) == A.t):
        raise AssertionError("levelness disagrees with the equal-rows criterion")
    return level


def level_type(A: DegreeMatrix) -> tuple[int, int]:
    """(socle degree, Cohen-Macaulay type) of a level scheme:
    (tau(A), binom(t+c-2, c-1)).  Cross-checked against h_recursive(A).
    """
    if not is_level(A):
        raise NotLevel("level_type requires a level scheme")
    degree, cmtype = tau(A), binom(A.t + A.c - 2, A.c - 1)
    h = h_recursive(A)
    if (len(h) - 1, h[-1]) != (degree, cmtype):
        raise AssertionError("level type disagrees with the h-vector")
    return degree, cmtype
