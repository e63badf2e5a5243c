"""Matroids whose cover ideals realize determinantal h-vectors.

delta0(c, m, sizes) is the simplicial complex on groups A_1, ..., A_m of
the given sizes whose facets are the transversals of c distinct groups:
the independence complex of a transversal matroid.  The h-vector of its
cover ideal's quotient satisfies the deletion/link recursion

    h_i(D) = h_(i-1)(D minus v) + h_i(link_D(v))      (v not a cone point)

with h = (1) for a simplex, and also a grouped recursion that peels off
the last group.  Both are implemented; their agreement is a test oracle.

Complexes carry an explicit vertex set (a superset of the union of the
facets) so that dual() is an involution even for the simplex, whose dual
is the complex with the single empty facet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .hseries import HVector, ci_hpoly


class BadParameters(ValueError):
    """Raised for inconsistent (c, m, sizes) arguments."""


class NotAMatroid(ValueError):
    """Raised when a matroid-only operation receives a non-matroid complex."""


class UnknownVertex(ValueError):
    """Raised when a vertex is not in the complex's vertex set."""


class NotPureComplex(ValueError):
    """Raised when dual() receives a complex with facets of mixed sizes."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet representation of a simplicial complex."""

    vertices: frozenset[int]
    facets: frozenset[frozenset[int]]

    def __str__(self) -> str:
        parts = [
            "{" + ",".join(str(v) for v in sorted(F)) + "}"
            for F in sorted(self.facets, key=lambda F: (len(F), sorted(F)))
        ]
        return f"complex(vertices={sorted(self.vertices)}, facets=[{' '.join(parts)}])"


def _maximal(sets: Iterable[frozenset[int]]) -> frozenset[frozenset[int]]:
    pool = set(sets)
    return frozenset(
        F for F in pool if not any(F != G and F <= G for G in pool)
    )


def complex_from_facets(
    facets: Iterable[Iterable[int]], vertices: Optional[Iterable[int]] = None
) -> SimplicialComplex:
    """Build a complex, keeping only maximal faces.

    The vertex set defaults to the union of the facets; an explicit one
    must contain that union.
    """
    fs = _maximal(frozenset(int(v) for v in F) for F in facets)
    if not fs:
        raise ValueError("need at least one facet (possibly the empty face)")
    used = frozenset(v for F in fs for v in F)
    if vertices is None:
        verts = used
    else:
        verts = frozenset(int(v) for v in vertices)
        if not used <= verts:
            raise ValueError("vertex set must contain every facet vertex")
    return SimplicialComplex(vertices=verts, facets=fs)


def all_faces(cx: SimplicialComplex) -> set[frozenset[int]]:
    """Every subset of every facet."""
    faces: set[frozenset[int]] = set()
    for F in cx.facets:
        elems = tuple(F)
        for k in range(len(elems) + 1):
            faces.update(frozenset(sub) for sub in itertools.combinations(elems, k))
    return faces


def is_matroid(cx: SimplicialComplex) -> bool:
    """Brute-force augmentation check: for faces F, G with |F| > |G| some
    i in F - G has G + i still a face.  Vertices outside every facet are
    treated as loops and do not affect the answer.
    """
    faces = all_faces(cx)
    by_size: dict[int, list[frozenset[int]]] = {}
    for F in faces:
        by_size.setdefault(len(F), []).append(F)
    sizes = sorted(by_size)
    for fs in sizes:
        for gs in sizes:
            if gs >= fs:
                continue
            for F in by_size[fs]:
                for G in by_size[gs]:
                    if not any(G | {i} in faces for i in F - G):
                        return False
    return True


def is_cone_point(cx: SimplicialComplex, v: int) -> bool:
    """True when v lies in every facet."""
    if v not in cx.vertices:
        raise UnknownVertex(f"vertex {v} not in complex")
    return all(v in F for F in cx.facets)


def link(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """link(v): faces G with v not in G and G + v a face."""
    if v not in cx.vertices:
        raise UnknownVertex(f"vertex {v} not in complex")
    touching = [F - {v} for F in cx.facets if v in F]
    if not touching:
        raise ValueError(f"vertex {v} lies in no facet; its link is void")
    return SimplicialComplex(
        vertices=cx.vertices - {v}, facets=_maximal(touching)
    )


def deletion(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """The faces avoiding v."""
    if v not in cx.vertices:
        raise UnknownVertex(f"vertex {v} not in complex")
    candidates = [F - {v} if v in F else F for F in cx.facets]
    return SimplicialComplex(
        vertices=cx.vertices - {v}, facets=_maximal(candidates)
    )


def dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Complement every facet within the vertex set; an involution on pure
    complexes, and it sends matroids to their dual matroids.
    """
    if len({len(F) for F in cx.facets}) != 1:
        raise NotPureComplex("dual needs all facets of one size")
    return SimplicialComplex(
        vertices=cx.vertices,
        facets=frozenset(cx.vertices - F for F in cx.facets),
    )


# ---------------------------------------------------------------------------
# h-vector of the cover ideal quotient


def cover_h(cx: SimplicialComplex, pivot: str = "min") -> HVector:
    """h-vector of the quotient by the cover ideal, via deletion and link.

    Requires a matroid.  The pivot vertex at each step is the smallest
    non-cone-point vertex ("min"); "max" picks the largest instead and
    must give the same answer (tested, not assumed).
    """
    if pivot not in ("min", "max"):
        raise ValueError(f"unknown pivot rule {pivot!r}")
    if not is_matroid(cx):
        raise NotAMatroid("cover_h requires a matroid complex")
    return _cover_h(cx, min if pivot == "min" else max, {})


def _facet_key(cx: SimplicialComplex) -> tuple:
    return tuple(sorted(tuple(sorted(F)) for F in cx.facets))


def _cover_h(cx: SimplicialComplex, pick, memo: dict) -> HVector:
    key = _facet_key(cx)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if len(cx.facets) == 1:
        # a simplex (or the empty-face complex): the quotient is the base field
        h: HVector = (1,)
    else:
        used = {v for F in cx.facets for v in F}
        v = pick(v for v in used if not all(v in F for F in cx.facets))
        hd = _cover_h(deletion(cx, v), pick, memo)
        hl = _cover_h(link(cx, v), pick, memo)
        h = tuple(
            (hd[i - 1] if 1 <= i <= len(hd) else 0)
            + (hl[i] if i < len(hl) else 0)
            for i in range(max(len(hd) + 1, len(hl)))
        )
    memo[key] = h
    return h


# ---------------------------------------------------------------------------
# the transversal complex delta0 and its direct h-vector


def _check_params(c: int, m: int, sizes: Sequence[int]) -> tuple[int, ...]:
    sz = tuple(int(a) for a in sizes)
    if m != len(sz):
        raise BadParameters(f"m={m} but {len(sz)} group sizes given")
    if not 1 <= c <= m:
        raise BadParameters(f"need 1 <= c <= m, got c={c}, m={m}")
    if any(a < 1 for a in sz):
        raise BadParameters("group sizes must be positive")
    return sz


def delta0_groups(sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Consecutive vertex labels for each group: group i gets
    offset+1 ... offset+sizes[i], starting from 1."""
    groups = []
    offset = 0
    for a in sizes:
        groups.append(tuple(range(offset + 1, offset + a + 1)))
        offset += a
    return tuple(groups)


def delta0(c: int, m: int, sizes: Sequence[int]) -> SimplicialComplex:
    """Facets are all transversals of c of the m groups."""
    sz = _check_params(c, m, sizes)
    groups = delta0_groups(sz)
    facets = [
        frozenset(choice)
        for combo in itertools.combinations(range(m), c)
        for choice in itertools.product(*(groups[i] for i in combo))
    ]
    return complex_from_facets(facets, vertices=range(1, sum(sz) + 1))


def delta0_h(c: int, m: int, sizes: Sequence[int]) -> HVector:
    """h-vector of delta0's cover ideal quotient by the grouped recursion:

        h(c, sizes) = z^a_m * h(c, sizes[:-1])
                    + (1 + ... + z^(a_m - 1)) * h(c-1, sizes[:-1]),

    with h = ci_hpoly(sizes) when c = m and h = (1, ..., 1) of length
    sum(sizes) when c = 1.  Agrees with cover_h(delta0(...)) (tested).
    """
    sz = _check_params(c, m, sizes)
    return _delta0_h(c, sz)


@lru_cache(maxsize=None)
def _delta0_h(c: int, sizes: tuple[int, ...]) -> HVector:
    if c == len(sizes):
        return ci_hpoly(sizes)
    if c == 1:
        return (1,) * sum(sizes)
    head, last = sizes[:-1], sizes[-1]
    keep = _delta0_h(c, head)
    drop = _delta0_h(c - 1, head)
    out = [0] * max(last + len(keep), last - 1 + len(drop))
    for i, x in enumerate(keep):
        out[last + i] += x
    for k in range(last):
        for i, x in enumerate(drop):
            out[k + i] += x
    return tuple(out)


# ---------------------------------------------------------------------------
# linear representation


def represent_delta0(c: int, m: int, sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """A c x sum(sizes) integer matrix whose column matroid is delta0.

    Column j for a vertex in group i is the Vandermonde vector
    (1, t_i, t_i^2, ..., t_i^(c-1)) at t_i = i-1, repeated across the
    group.  Any c columns from distinct groups form a Vandermonde matrix
    with distinct nodes, hence are independent; two columns from one
    group are equal, hence dependent.
    """
    sz = _check_params(c, m, sizes)
    cols = []
    for i in range(m):
        col = tuple(i**k for k in range(c))
        cols.extend([col] * sz[i])
    return tuple(tuple(col[k] for col in cols) for k in range(c))


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(nrows):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
