"""Pure O-sequences, order ideals, and purity of determinantal h-vectors.

An order ideal is a finite set of monomials closed under division; it is
pure when all maximal monomials share one degree.  A vector h is a pure
O-sequence when it is the degree-count vector (f-vector) of some pure
order ideal.  Deciding that for a given h combines cheap necessary-
condition screens with an exhaustive search over candidate generator
sets, canonicalized under variable permutation.

For the h-vector of a degree matrix A there are shortcuts: equal rows
give an explicit pure witness, while several sign conditions on the
reduced matrix force a not-pure verdict without any search.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .degree_matrix import DegreeMatrix, max_equal_rows, reduce_zeros
from .hseries import (
    HVector,
    binom,
    flawless_violation,
    h_recursive,
    is_osequence,
    macaulay_bound,
    tau,
    validate_hvector,
)

Monomial = tuple[int, ...]


class MixedArity(ValueError):
    """Raised when monomials of different arities are combined."""


class RowsNotEqual(ValueError):
    """Raised when an equal-rows construction receives an unequal-rows matrix."""


class PreconditionFailed(ValueError):
    """Raised when a shortcut's hypothesis does not hold for the given matrix."""


@dataclass(frozen=True)
class OrderIdeal:
    """A finite division-closed set of monomials in a fixed variable count."""

    nvars: int
    generators: tuple[Monomial, ...]
    monomials: frozenset[Monomial]


@dataclass(frozen=True)
class ScreenFailure:
    """A necessary condition for pure O-sequences that h fails.

    rule is one of "not-osequence", "not-flawless", "divisor-bound";
    index locates the violation (the degree i+1 exceeding the Macaulay
    bound, the i with h_i > h_(s-i), or the i with h_(s-i) over the
    divisor bound, respectively).
    """

    rule: str
    index: int


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for the exhaustive witness search; None disables a budget.

    A node is any partial or complete generator set visited.  The time
    budget makes verdicts machine-dependent; for reproducible runs use
    the node budget alone.
    """

    max_nodes: Optional[int] = 10_000_000
    max_seconds: Optional[float] = 60.0


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class PurityVerdict:
    """Outcome of a purity decision.

    status is "pure", "not-pure" or "inconclusive".  rule names the
    deciding step: "unit", "equal-rows", "codim1-chain", "search" (pure);
    "codim2-unequal-rows", "positive-subdiagonal", "hibi-violation",
    "not-osequence", "not-flawless", "divisor-bound", "exhausted-search"
    (not pure); "node-budget", "time-budget" (inconclusive).  witness is
    a pure generator set with f-vector h when status is "pure"; index
    locates a screen violation; nodes counts search nodes visited.
    """

    status: str
    rule: str
    witness: Optional[tuple[Monomial, ...]] = None
    index: Optional[int] = None
    nodes: int = 0

    @property
    def is_pure(self) -> Optional[bool]:
        if self.status == "pure":
            return True
        if self.status == "not-pure":
            return False
        return None


# ---------------------------------------------------------------------------
# order ideals


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _divisors(g: Monomial) -> Iterable[Monomial]:
    return itertools.product(*(range(e + 1) for e in g))


def close_under_division(generators: Iterable[Monomial]) -> OrderIdeal:
    """The order ideal of all divisors of the given monomials.

    The stored generators are the maximal monomials of the closure, so
    redundant inputs are dropped.  All monomials must share one arity.
    """
    gens = {tuple(int(e) for e in g) for g in generators}
    if not gens:
        raise ValueError("need at least one generator")
    arities = {len(g) for g in gens}
    if len(arities) != 1:
        raise MixedArity(f"generators mix arities {sorted(arities)}")
    if any(e < 0 for g in gens for e in g):
        raise ValueError("exponents must be nonnegative")
    nvars = arities.pop()
    monomials: set[Monomial] = set()
    for g in gens:
        monomials.update(_divisors(g))
    maximal = tuple(
        sorted(g for g in gens if not any(g != o and divides(g, o) for o in gens))
    )
    return OrderIdeal(nvars=nvars, generators=maximal, monomials=frozenset(monomials))


def f_vector(ideal: OrderIdeal) -> HVector:
    """Monomial counts of the ideal by degree, from 0 to the top degree."""
    top = max(sum(m) for m in ideal.monomials)
    f = [0] * (top + 1)
    for m in ideal.monomials:
        f[sum(m)] += 1
    return tuple(f)


def is_pure_ideal(ideal: OrderIdeal) -> bool:
    """True when all maximal monomials have the same degree."""
    return len({sum(g) for g in ideal.generators}) == 1


def gamma_from_matrix(A: DegreeMatrix) -> OrderIdeal:
    """The pure order ideal witnessing h(A) for an equal-rows matrix.

    Write (a_1, ..., a_m) for the common row, m = t+c-1.  Each way of
    cutting the row into c consecutive nonempty blocks contributes one
    generator, whose j-th exponent is (sum of block j) - 1.  Distinct
    cuts give distinct generators, all of degree tau(A), and the
    f-vector of the closure equals h_recursive(A).
    """
    if max_equal_rows(A) != A.t:
        raise RowsNotEqual("gamma_from_matrix needs all rows equal")
    row = A.entries[0]
    m, c = A.ncols, A.c
    gens = []
    for cuts in itertools.combinations(range(1, m), c - 1):
        bounds = (0,) + cuts + (m,)
        gens.append(tuple(sum(row[bounds[j] : bounds[j + 1]]) - 1 for j in range(c)))
    return close_under_division(gens)


# ---------------------------------------------------------------------------
# necessary-condition screens


def screen(h: Iterable[int]) -> Optional[ScreenFailure]:
    """First failed necessary condition for h to be a pure O-sequence.

    Checks, in order: Macaulay growth (every O-sequence), flawlessness
    (h_i <= h_(s-i) for i <= s/2), and the divisor bound
    h_(s-i) <= min(binom(c-1+s-i, c-1), h_s * binom(c-1+i, c-1)) with
    c = h_1.  Returns None when all pass.
    """
    hv = validate_hvector(h)
    s = len(hv) - 1
    if not is_osequence(hv):
        for i in range(1, s):
            if hv[i + 1] > macaulay_bound(hv[i], i):
                return ScreenFailure("not-osequence", i + 1)
    i = flawless_violation(hv)
    if i is not None:
        return ScreenFailure("not-flawless", i)
    if s >= 1:
        c = hv[1]
        for i in range(s + 1):
            bound = min(binom(c - 1 + s - i, c - 1), hv[s] * binom(c - 1 + i, c - 1))
            if hv[s - i] > bound:
                return ScreenFailure("divisor-bound", i)
    return None


# ---------------------------------------------------------------------------
# exhaustive witness search


class _BudgetExceeded(Exception):
    def __init__(self, rule: str):
        self.rule = rule


def _monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, in colexicographic
    order (compare last exponents first), which fixes the search order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int) -> None:
        if len(prefix) == nvars - 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    rec([], degree)
    out.sort(key=lambda m: m[::-1])
    return out


def _orbit_representative(
    gens: tuple[Monomial, ...],
    perms: list[tuple[int, ...]],
    pick: Callable = min,
) -> tuple[Monomial, ...]:
    return pick(
        tuple(sorted(tuple(g[p] for p in perm) for g in gens)) for perm in perms
    )


def search_pure_witness(
    h: Iterable[int],
    limits: SearchLimits = DEFAULT_LIMITS,
    _orbit_pick: Callable = min,
) -> PurityVerdict:
    """Exhaustive search for a pure order ideal with f-vector h.

    Works in c = h_1 variables (any pure order ideal with f-vector h has
    exactly h_1 degree-one monomials, so h_1 variables suffice; see the
    README note).  Candidate generator sets are the size-h_s subsets of
    the degree-s monomials, enumerated as index combinations in
    lexicographic order; a partial set is pruned once its union of
    degree-(s-1) divisors exceeds h_(s-1), and only the sorted-orbit
    representative of each variable-permutation orbit is evaluated.

    Returns Pure with the first witness found, NotPure("exhausted-search")
    when the whole space was covered, or Inconclusive when a budget from
    `limits` trips first.
    """
    hv = validate_hvector(h)
    s = len(hv) - 1
    if s == 0:
        return PurityVerdict(status="pure", rule="unit", witness=((),))
    c = hv[1]
    # refuse up front when even listing the candidates would blow the budget
    if limits.max_nodes is not None and binom(c + s - 1, c - 1) > limits.max_nodes:
        return PurityVerdict(status="inconclusive", rule="node-budget")
    mons = _monomials_of_degree(c, s)
    # orbit dedup is an optimization; skip it when c! is itself unaffordable
    if c <= 6:
        perms = list(itertools.permutations(range(c)))
    else:
        perms = [tuple(range(c))]
    need = hv[s]
    deadline = None if limits.max_seconds is None else time.monotonic() + limits.max_seconds
    nodes = 0

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if limits.max_nodes is not None and nodes > limits.max_nodes:
            raise _BudgetExceeded("node-budget")
        if deadline is not None and time.monotonic() > deadline:
            raise _BudgetExceeded("time-budget")

    def rec(
        start: int, chosen: list[Monomial], below: frozenset[Monomial]
    ) -> Optional[tuple[Monomial, ...]]:
        tick()
        if len(chosen) == need:
            gens = tuple(sorted(chosen))
            if _orbit_representative(gens, perms, _orbit_pick) != gens:
                return None
            counts = [0] * (s + 1)
            seen: set[Monomial] = set()
            for g in gens:
                for d in _divisors(g):
                    if d not in seen:
                        seen.add(d)
                        counts[sum(d)] += 1
            if tuple(counts) == hv:
                return gens
            return None
        for idx in range(start, len(mons) - (need - len(chosen)) + 1):
            g = mons[idx]
            grown = below | {
                g[:i] + (g[i] - 1,) + g[i + 1 :] for i in range(c) if g[i] > 0
            }
            # the closure's count in degree s-1 is exactly this union's size
            if len(grown) > hv[s - 1]:
                continue
            found = rec(idx + 1, chosen + [g], grown)
            if found is not None:
                return found
        return None

    try:
        witness = rec(0, [], frozenset())
    except _BudgetExceeded as exc:
        return PurityVerdict(status="inconclusive", rule=exc.rule, nodes=nodes)
    if witness is not None:
        return PurityVerdict(status="pure", rule="search", witness=witness, nodes=nodes)
    return PurityVerdict(status="not-pure", rule="exhausted-search", nodes=nodes)


def is_pure_osequence(
    h: Iterable[int], limits: SearchLimits = DEFAULT_LIMITS
) -> PurityVerdict:
    """Decide whether h is a pure O-sequence: screens first, then search."""
    hv = validate_hvector(h)
    failure = screen(hv)
    if failure is not None:
        return PurityVerdict(status="not-pure", rule=failure.rule, index=failure.index)
    return search_pure_witness(hv, limits)


# ---------------------------------------------------------------------------
# purity of determinantal h-vectors


def hibi_violation_index(A: DegreeMatrix) -> int:
    """An index i0 with h_i0 > h_(s-i0), valid when c >= 2, A is zero-free
    and a_21 < 0: the flawlessness of h(A) fails at i0 = a_11.
    """
    if A.c < 2:
        raise PreconditionFailed("needs codimension at least 2")
    if not A.zero_free:
        raise PreconditionFailed("needs a zero-free matrix")
    if A.t < 2 or A[2, 1] >= 0:
        raise PreconditionFailed("needs a_21 < 0")
    return A[1, 1]


def purity_of_matrix(
    A: DegreeMatrix, limits: SearchLimits = DEFAULT_LIMITS
) -> PurityVerdict:
    """Decide whether h(A) is a pure O-sequence.

    Zeros are reduced away first; every rule below assumes a zero-free
    matrix and would be wrong without this (a matrix with zeros and
    unequal rows can reduce to an equal-rows matrix with pure h).  On
    the reduced matrix B, in order:

      1. all rows equal: pure, witnessed by gamma_from_matrix(B); the
         witness's f-vector is checked against h at runtime;
      2. c = 1: pure, witnessed by the chain (the one-variable order
         ideal of y^s); the sign rules below do not apply here;
      3. c = 2 with unequal rows: not pure;
      4. a_(r+1,1) > 0 (r = max_equal_rows(B) < t): not pure;
      5. a_21 < 0: not pure, flawlessness fails at index a_11;
      6. otherwise screens, then exhaustive search under `limits`.
    """
    B = reduce_zeros(A)
    h = h_recursive(B)
    r = max_equal_rows(B)
    if r == B.t:
        ideal = gamma_from_matrix(B)
        if f_vector(ideal) != h:
            raise AssertionError("equal-rows witness does not match h(A)")
        return PurityVerdict(status="pure", rule="equal-rows", witness=ideal.generators)
    if B.c == 1:
        s = tau(B)
        ideal = close_under_division([(s,)])
        if f_vector(ideal) != h:
            raise AssertionError("chain witness does not match h(A)")
        return PurityVerdict(
            status="pure", rule="codim1-chain", witness=ideal.generators
        )
    if B.c == 2:
        return PurityVerdict(status="not-pure", rule="codim2-unequal-rows")
    if B[r + 1, 1] > 0:
        return PurityVerdict(status="not-pure", rule="positive-subdiagonal")
    if B[2, 1] < 0:
        return PurityVerdict(
            status="not-pure", rule="hibi-violation", index=hibi_violation_index(B)
        )
    return is_pure_osequence(h, limits)
