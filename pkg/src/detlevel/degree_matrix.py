"""Degree matrices of standard determinantal schemes.

A degree matrix is a t x (t+c-1) integer matrix A = (a_ij) that is
homogeneous (a_ij + a_kl = a_il + a_kj for all i,k,j,l), has rows
nondecreasing left to right, columns nonincreasing top to bottom, and a
positive main diagonal (a_ii > 0).  Homogeneity means every row is a
common translate of the first row, so A is determined by its first row
together with one nonnegative offset per subsequent row.

Indices in error messages and in the submatrix API are 1-based to match
the usual matrix notation; storage is 0-based tuples.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class DegreeMatrixError(ValueError):
    """Base error for malformed degree matrices."""


class ShapeError(DegreeMatrixError):
    """Raised when the entries are not a t x (t+c-1) array with t >= 1, c >= 1."""


class NotHomogeneous(DegreeMatrixError):
    """Raised with the first witness (i, k, j, l) of a_ij + a_kl != a_il + a_kj."""

    def __init__(self, i: int, k: int, j: int, l: int):
        self.position = (i, k, j, l)
        super().__init__(
            f"not homogeneous: rows {i},{k} and columns {j},{l} "
            f"violate a[{i}][{j}] + a[{k}][{l}] == a[{i}][{l}] + a[{k}][{j}]"
        )


class NotOrdered(DegreeMatrixError):
    """Raised at the first entry breaking row or column monotonicity."""

    def __init__(self, kind: str, i: int, j: int):
        self.kind = kind
        self.position = (i, j)
        super().__init__(f"not ordered ({kind}) at entry ({i}, {j})")


class NonPositiveDiagonal(DegreeMatrixError):
    """Raised at the first diagonal entry a_ii <= 0."""

    def __init__(self, i: int):
        self.position = i
        super().__init__(f"diagonal entry a[{i}][{i}] is not positive")


@dataclass(frozen=True)
class DegreeMatrix:
    """A validated degree matrix.  Construct via validate()."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        """Number of rows."""
        return len(self.entries)

    @property
    def c(self) -> int:
        """Codimension: number of columns minus number of rows plus one."""
        return len(self.entries[0]) - len(self.entries) + 1

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def zero_free(self) -> bool:
        """True when no entry equals zero."""
        return all(a != 0 for row in self.entries for a in row)

    def row(self, i: int) -> tuple[int, ...]:
        """Row i, 1-based."""
        return self.entries[i - 1]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """Entry a_ij, 1-based."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self.entries)


def validate(raw: Sequence[Sequence[int]]) -> DegreeMatrix:
    """Check all degree-matrix invariants and return the frozen matrix.

    Raises ShapeError, NotHomogeneous, NotOrdered or NonPositiveDiagonal
    naming the first violated invariant and its 1-based position.
    """
    rows = tuple(tuple(int(a) for a in row) for row in raw)
    if not rows or not rows[0]:
        raise ShapeError("matrix must have at least one row and one column")
    ncols = len(rows[0])
    for i, row in enumerate(rows, start=1):
        if len(row) != ncols:
            raise ShapeError(f"row {i} has {len(row)} entries, expected {ncols}")
    t = len(rows)
    if ncols < t:
        raise ShapeError(f"{t} x {ncols} matrix needs at least as many columns as rows")

    # Homogeneity: every row must be a constant translate of the first row.
    for i in range(1, t):
        shift = rows[i][0] - rows[0][0]
        for j in range(1, ncols):
            if rows[i][j] - rows[0][j] != shift:
                raise NotHomogeneous(1, i + 1, 1, j + 1)

    for i in range(t):
        for j in range(ncols - 1):
            if rows[i][j] > rows[i][j + 1]:
                raise NotOrdered("row must be nondecreasing", i + 1, j + 2)
    for j in range(ncols):
        for i in range(t - 1):
            if rows[i][j] < rows[i + 1][j]:
                raise NotOrdered("column must be nonincreasing", i + 2, j + 1)

    for i in range(t):
        if rows[i][i] <= 0:
            raise NonPositiveDiagonal(i + 1)

    return DegreeMatrix(rows)


def submatrix(A: DegreeMatrix, row: int = 0, col: int = 0) -> DegreeMatrix:
    """Delete one row and/or one column (1-based; 0 keeps the axis intact).

    Deleting both row k and column l keeps the codimension; deleting only
    a column drops it by one.  The deletions used by the h-vector
    recursion (pivots on or above the diagonal, zeros below it) preserve
    the invariants; the result is re-validated, so illegal deletions raise.
    """
    if not (0 <= row <= A.t):
        raise ShapeError(f"row index {row} out of range 0..{A.t}")
    if not (0 <= col <= A.ncols):
        raise ShapeError(f"column index {col} out of range 0..{A.ncols}")
    rows = [list(r) for r in A.entries]
    if row:
        del rows[row - 1]
    if col:
        for r in rows:
            del r[col - 1]
    return validate(rows)


def max_equal_rows(A: DegreeMatrix) -> int:
    """The largest r such that the first r rows of A are all equal."""
    r = 1
    first = A.entries[0]
    while r < A.t and A.entries[r] == first:
        r += 1
    return r


def reduce_zeros(A: DegreeMatrix) -> DegreeMatrix:
    """Delete (row, column) at zero entries, first zero in row-major order,
    until the matrix is zero-free.  The h-vector is unchanged by each step.
    """
    while True:
        pos = next(
            ((i, j) for i in range(A.t) for j in range(A.ncols) if A.entries[i][j] == 0),
            None,
        )
        if pos is None:
            return A
        # A zero sits strictly below the diagonal, so row > col and the
        # deletion leaves a valid matrix of the same codimension.
        A = submatrix(A, row=pos[0] + 1, col=pos[1] + 1)


def enumerate_matrices(
    t: int, c: int, max_entry: int, zero_free: bool = True
) -> Iterator[DegreeMatrix]:
    """All degree matrices of shape t x (t+c-1) with entries <= max_entry,
    up to the normalization built into the invariants.

    A matrix is emitted as (first row, row offsets): the first row is any
    nondecreasing tuple in {1..max_entry}, and row i equals the first row
    minus u_i for offsets 0 = u_1 <= u_2 <= ... <= u_t with u_i <= a_1i - 1
    (which is exactly diagonal positivity).  Emission is lexicographic in
    (first row, offsets).  With zero_free=True, matrices containing a zero
    entry are skipped.
    """
    if t < 1 or c < 1:
        raise ShapeError("need t >= 1 and c >= 1")
    if max_entry < 1:
        return
    ncols = t + c - 1

    def offsets(first_row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
            i = len(prefix)
            if i == t:
                yield tuple(prefix)
                return
            # u_i <= u_{i+1} and a_1,{i+1} - u_{i+1} >= 1 keeps the diagonal positive
            for u in range(prefix[-1], first_row[i]):
                yield from rec(prefix + [u])

        yield from rec([0])

    for first_row in itertools.combinations_with_replacement(range(1, max_entry + 1), ncols):
        for us in offsets(first_row):
            if zero_free and any(u == a for u in set(us) for a in first_row):
                continue
            rows = tuple(tuple(a - u for a in first_row) for u in us)
            yield DegreeMatrix(rows)


def canonical_key(A: DegreeMatrix) -> bytes:
    """Injective byte encoding of A, usable as a cache key."""
    head = f"{A.t} {A.ncols}"
    body = " ".join(str(a) for row in A.entries for a in row)
    return f"{head}:{body}".encode()


def matrix_from_key(key: bytes) -> DegreeMatrix:
    """Inverse of canonical_key."""
    head, body = key.decode().split(":")
    t, ncols = (int(x) for x in head.split())
    flat = [int(x) for x in body.split()]
    if len(flat) != t * ncols:
        raise ShapeError("corrupt canonical key")
    rows = [flat[i * ncols : (i + 1) * ncols] for i in range(t)]
    return validate(rows)


def parse_matrix_text(text: str) -> DegreeMatrix:
    """Parse whitespace-separated integer rows, one row per line."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise DegreeMatrixError(f"bad matrix line {line!r}") from exc
    if not rows:
        raise DegreeMatrixError("empty matrix input")
    return validate(rows)


def parse_matrix_json(text: str) -> DegreeMatrix:
    """Parse a JSON object {"rows": [[...], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DegreeMatrixError(f"bad JSON matrix: {exc}") from exc
    if not isinstance(obj, dict) or "rows" not in obj:
        raise DegreeMatrixError('JSON matrix must be an object with a "rows" key')
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DegreeMatrixError('"rows" must be a list of integer lists')
    return validate(rows)


def parse_matrix(text: str) -> DegreeMatrix:
    """Parse either format, sniffing JSON by a leading '{'."""
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_text(text)


def matrix_to_json(A: DegreeMatrix) -> str:
    """Serialize to the JSON input format."""
    return json.dumps({"rows": [list(row) for row in A.entries]})
