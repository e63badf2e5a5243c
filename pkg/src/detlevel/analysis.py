"""Full per-matrix reports and conjecture sweeps.

analyze_matrix bundles every invariant this package computes for one
degree matrix; run_conjecture enumerates matrices and looks for
counterexamples to "h(A) is a pure O-sequence exactly when all rows of A
are equal" (zero-free, codimension >= 2).

Conjecture output is deterministic: reports carry no wall-clock data and
aggregation preserves enumeration order regardless of thread count.
Time budgets (as opposed to node budgets) can still flip individual
verdicts to inconclusive on a slow machine.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .degree_matrix import DegreeMatrix, enumerate_matrices, max_equal_rows, reduce_zeros
from .hseries import (
    HVector,
    flawless_violation,
    h_recursive,
    is_log_concave,
    is_osequence,
    last_entry,
    tau,
)
from .level import socle_shifts
from .pure_osequence import (
    DEFAULT_LIMITS,
    PurityVerdict,
    SearchLimits,
    purity_of_matrix,
)

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AnalysisReport:
    """Everything computed for one degree matrix.

    equal_rows and r describe the input matrix; level, socle data and
    purity describe the scheme, so they are computed on the zero-reduced
    matrix (echoed in reduced_matrix when reduction changed anything).
    """

    matrix: Rows
    t: int
    c: int
    zero_free: bool
    reduced_matrix: Optional[Rows]
    r: int
    equal_rows: bool
    h: HVector
    tau: int
    last_entry: int
    socle_shifts: tuple[int, ...]
    level: bool
    socle_degree: Optional[int]
    cm_type: Optional[int]
    log_concave: bool
    flawless: bool
    flawless_violation: Optional[int]
    osequence: bool
    purity: PurityVerdict


def analyze_matrix(A: DegreeMatrix, limits: SearchLimits = DEFAULT_LIMITS) -> AnalysisReport:
    """Compute the full report, with internal consistency checks."""
    B = reduce_zeros(A)
    h = h_recursive(A)
    if len(h) - 1 != tau(A):
        raise AssertionError("h-vector degree disagrees with tau")
    if h[-1] != last_entry(A):
        raise AssertionError("h-vector last entry disagrees with binom(r+c-2, c-1)")
    shifts = socle_shifts(B)
    level = shifts.all_equal
    purity = purity_of_matrix(A, limits)
    violation = flawless_violation(h)
    return AnalysisReport(
        matrix=A.entries,
        t=A.t,
        c=A.c,
        zero_free=A.zero_free,
        reduced_matrix=None if B is A else B.entries,
        r=max_equal_rows(A),
        equal_rows=max_equal_rows(A) == A.t,
        h=h,
        tau=tau(A),
        last_entry=last_entry(A),
        socle_shifts=shifts.shifts,
        level=level,
        socle_degree=tau(B) if level else None,
        cm_type=shifts.rank if level else None,
        log_concave=is_log_concave(h),
        flawless=violation is None,
        flawless_violation=violation,
        osequence=is_osequence(h),
        purity=purity,
    )


def purity_to_dict(v: PurityVerdict) -> dict:
    return {
        "status": v.status,
        "rule": v.rule,
        "witness": None if v.witness is None else [list(m) for m in v.witness],
        "index": v.index,
        "nodes": v.nodes,
    }


def report_to_dict(rep: AnalysisReport) -> dict:
    return {
        "matrix": [list(r) for r in rep.matrix],
        "t": rep.t,
        "c": rep.c,
        "zero_free": rep.zero_free,
        "reduced_matrix": None
        if rep.reduced_matrix is None
        else [list(r) for r in rep.reduced_matrix],
        "r": rep.r,
        "equal_rows": rep.equal_rows,
        "h": list(rep.h),
        "tau": rep.tau,
        "last_entry": rep.last_entry,
        "socle_shifts": list(rep.socle_shifts),
        "level": rep.level,
        "socle_degree": rep.socle_degree,
        "cm_type": rep.cm_type,
        "log_concave": rep.log_concave,
        "flawless": rep.flawless,
        "flawless_violation": rep.flawless_violation,
        "osequence": rep.osequence,
        "purity": purity_to_dict(rep.purity),
    }


# Stable CSV schema, version 1.  Kept deterministic: no timing columns.
REPORT_COLUMNS = (
    "matrix",
    "t",
    "c",
    "zero_free",
    "r",
    "equal_rows",
    "h",
    "tau",
    "last_entry",
    "socle_shifts",
    "level",
    "socle_degree",
    "cm_type",
    "log_concave",
    "flawless",
    "flawless_violation",
    "osequence",
    "purity_status",
    "purity_rule",
    "purity_index",
    "purity_witness",
    "purity_nodes",
)


def _fmt_matrix(rows: Rows) -> str:
    return ";".join(" ".join(str(a) for a in row) for row in rows)


def _fmt_witness(witness: Optional[tuple[tuple[int, ...], ...]]) -> str:
    if witness is None:
        return ""
    return "|".join(",".join(str(e) for e in m) for m in witness)


def report_to_row(rep: AnalysisReport) -> list[str]:
    """One CSV row per REPORT_COLUMNS; None becomes the empty cell."""
    values = [
        _fmt_matrix(rep.matrix),
        rep.t,
        rep.c,
        rep.zero_free,
        rep.r,
        rep.equal_rows,
        " ".join(str(x) for x in rep.h),
        rep.tau,
        rep.last_entry,
        " ".join(str(x) for x in rep.socle_shifts),
        rep.level,
        rep.socle_degree,
        rep.cm_type,
        rep.log_concave,
        rep.flawless,
        rep.flawless_violation,
        rep.osequence,
        rep.purity.status,
        rep.purity.rule,
        rep.purity.index,
        _fmt_witness(rep.purity.witness),
        rep.purity.nodes,
    ]
    return ["" if v is None else str(v) for v in values]


@dataclass(frozen=True)
class ConjectureRunSummary:
    """Outcome of one enumeration sweep.

    A contradiction is a matrix whose purity verdict disagrees with the
    equal-rows prediction in either direction.  Matrices whose search hit
    a budget are listed separately; the conjecture is confirmed on the
    family only when contradictions and inconclusive are both empty.
    """

    t: int
    c: int
    max_entry: int
    zero_free: bool
    total: int
    pure: int
    not_pure: int
    inconclusive: int
    equal_rows_matrices: int
    rule_counts: tuple[tuple[str, int], ...]
    contradictions: tuple[Rows, ...]
    inconclusive_matrices: tuple[Rows, ...]
    reports: tuple[AnalysisReport, ...]


def run_conjecture(
    t: int,
    c: int,
    max_entry: int,
    zero_free: bool = True,
    limits: SearchLimits = DEFAULT_LIMITS,
    threads: int = 1,
) -> ConjectureRunSummary:
    """Analyze every enumerated matrix and compare purity with equal rows.

    The conjecture concerns codimension >= 2 (a codimension-1 h-vector is
    a chain's f-vector, always pure).  Zero-free enumeration is the
    default and matches the conjecture's hypotheses; with zeros allowed,
    purity still refers to the zero-reduced matrix but the equal-rows
    prediction uses the reduced matrix too.
    """
    if c < 2:
        raise ValueError("the conjecture concerns codimension >= 2")
    matrices = list(enumerate_matrices(t, c, max_entry, zero_free=zero_free))

    def work(A: DegreeMatrix) -> AnalysisReport:
        return analyze_matrix(A, limits)

    if threads <= 1:
        reports = [work(A) for A in matrices]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(work, matrices))

    rule_counts: dict[str, int] = {}
    contradictions: list[Rows] = []
    inconclusive: list[Rows] = []
    pure = not_pure = equal = 0
    for A, rep in zip(matrices, reports):
        verdict = rep.purity
        rule_counts[verdict.rule] = rule_counts.get(verdict.rule, 0) + 1
        reduced_equal = max_equal_rows(reduce_zeros(A)) == reduce_zeros(A).t
        if rep.equal_rows:
            equal += 1
        if verdict.status == "pure":
            pure += 1
            if not reduced_equal:
                contradictions.append(A.entries)
        elif verdict.status == "not-pure":
            not_pure += 1
            if reduced_equal:
                contradictions.append(A.entries)
        else:
            inconclusive.append(A.entries)
    return ConjectureRunSummary(
        t=t,
        c=c,
        max_entry=max_entry,
        zero_free=zero_free,
        total=len(matrices),
        pure=pure,
        not_pure=not_pure,
        inconclusive=len(inconclusive),
        equal_rows_matrices=equal,
        rule_counts=tuple(sorted(rule_counts.items())),
        contradictions=tuple(contradictions),
        inconclusive_matrices=tuple(inconclusive),
        reports=tuple(reports),
    )


def summary_to_dict(summary: ConjectureRunSummary, include_reports: bool = False) -> dict:
    out = {
        "t": summary.t,
        "c": summary.c,
        "max_entry": summary.max_entry,
        "zero_free": summary.zero_free,
        "total": summary.total,
        "pure": summary.pure,
        "not_pure": summary.not_pure,
        "inconclusive": summary.inconclusive,
        "equal_rows_matrices": summary.equal_rows_matrices,
        "rule_counts": {rule: n for rule, n in summary.rule_counts},
        "contradictions": [[list(r) for r in rows] for rows in summary.contradictions],
        "inconclusive_matrices": [
            [list(r) for r in rows] for rows in summary.inconclusive_matrices
        ],
    }
    if include_reports:
        out["reports"] = [report_to_dict(rep) for rep in summary.reports]
    return out
