import pytest

from detlevel.analysis import (
    REPORT_COLUMNS,
    analyze_matrix,
    report_to_dict,
    report_to_row,
    run_conjecture,
    summary_to_dict,
)
from detlevel.degree_matrix import enumerate_matrices, max_equal_rows, reduce_zeros, validate
from detlevel.pure_osequence import SearchLimits

from _examples import H_C, MATRIX_C, MATRIX_SEARCH, MATRIX_ZERO


def test_analyze_matrix_c():
    rep = analyze_matrix(validate(MATRIX_C))
    assert rep.h == H_C
    assert (rep.t, rep.c, rep.zero_free) == (2, 3, True)
    assert rep.reduced_matrix is None
    assert (rep.r, rep.equal_rows) == (1, False)
    assert (rep.tau, rep.last_entry) == (7, 1)
    assert rep.socle_shifts == (6, 8, 10)
    assert rep.level is False
    assert rep.socle_degree is None and rep.cm_type is None
    assert rep.log_concave is True
    assert rep.flawless is False and rep.flawless_violation == 3
    assert rep.osequence is True
    assert (rep.purity.status, rep.purity.rule) == ("not-pure", "positive-subdiagonal")


def test_analyze_matrix_with_zeros():
    rep = analyze_matrix(validate(MATRIX_ZERO))
    # input-side fields describe the raw matrix, scheme-side the reduction
    assert rep.equal_rows is False and rep.r == 1
    assert rep.reduced_matrix == ((2, 2),)
    assert rep.h == (1, 2, 1)
    assert rep.level is True
    assert (rep.socle_degree, rep.cm_type) == (2, 1)
    assert (rep.purity.status, rep.purity.rule) == ("pure", "equal-rows")


def test_analyze_equal_rows():
    rep = analyze_matrix(validate([[1, 2, 2], [1, 2, 2]]))
    assert rep.equal_rows is True
    assert rep.level is True
    assert (rep.socle_degree, rep.cm_type) == (3, 2)
    assert rep.h == (1, 2, 3, 2)
    assert rep.purity.witness == ((0, 3), (2, 1))


def test_report_serialization():
    rep = analyze_matrix(validate(MATRIX_C))
    d = report_to_dict(rep)
    assert d["h"] == list(H_C)
    assert d["purity"]["status"] == "not-pure"
    assert d["socle_degree"] is None
    row = report_to_row(rep)
    assert len(row) == len(REPORT_COLUMNS)
    as_map = dict(zip(REPORT_COLUMNS, row))
    assert as_map["matrix"] == "3 3 3 3;1 1 1 1"
    assert as_map["h"] == "1 3 6 10 9 7 3 1"
    assert as_map["socle_degree"] == ""  # None becomes the empty cell
    assert as_map["purity_rule"] == "positive-subdiagonal"


def test_report_row_witness_format():
    rep = analyze_matrix(validate([[1, 2, 2], [1, 2, 2]]))
    as_map = dict(zip(REPORT_COLUMNS, report_to_row(rep)))
    assert as_map["purity_witness"] == "0,3|2,1"
    assert as_map["level"] == "True"


def test_report_consistency_small_family():
    # every report's internal cross-checks must pass, and the scheme-side
    # verdicts must agree with the reduced matrix, over t+c <= 5, entries <= 3
    for zero_free in (True, False):
        for t in range(1, 5):
            for c in range(1, 6 - t):
                for A in enumerate_matrices(t, c, 3, zero_free=zero_free):
                    rep = analyze_matrix(A)
                    B = reduce_zeros(A)
                    reduced_equal = max_equal_rows(B) == B.t
                    assert rep.osequence, A.entries
                    assert rep.h[-1] == rep.last_entry
                    assert len(rep.h) - 1 == rep.tau
                    if B.c >= 2:
                        assert rep.level == reduced_equal, A.entries
                        assert rep.purity.is_pure == reduced_equal, A.entries
                    else:
                        assert rep.level and rep.purity.is_pure, A.entries


def test_run_conjecture_rejects_codim_one():
    with pytest.raises(ValueError):
        run_conjecture(t=2, c=1, max_entry=2)


def test_run_conjecture_codim2():
    summary = run_conjecture(t=2, c=2, max_entry=3)
    assert summary.total == summary.pure + summary.not_pure
    assert summary.inconclusive == 0
    assert summary.contradictions == ()
    assert summary.equal_rows_matrices == summary.pure
    rules = dict(summary.rule_counts)
    assert rules.get("equal-rows", 0) == summary.pure
    assert rules.get("codim2-unequal-rows", 0) == summary.not_pure


def test_run_conjecture_small_codim3():
    # every matrix here is decided by a shortcut or screen; nothing reaches
    # the exhaustive search
    summary = run_conjecture(t=2, c=3, max_entry=2)
    assert summary.contradictions == ()
    assert summary.inconclusive == 0
    rules = dict(summary.rule_counts)
    assert "exhausted-search" not in rules
    assert "search" not in rules


def test_run_conjecture_reaches_search():
    summary = run_conjecture(t=3, c=3, max_entry=3)
    assert summary.contradictions == ()
    assert summary.inconclusive == 0
    rules = dict(summary.rule_counts)
    assert rules.get("exhausted-search", 0) >= 1
    assert tuple(tuple(r) for r in MATRIX_SEARCH) in {
        rep.matrix for rep in summary.reports if rep.purity.rule == "exhausted-search"
    }


def test_run_conjecture_tiny_budget_goes_inconclusive():
    limits = SearchLimits(max_nodes=5, max_seconds=None)
    summary = run_conjecture(t=3, c=3, max_entry=3, limits=limits)
    assert summary.inconclusive >= 1
    assert summary.contradictions == ()
    assert tuple(tuple(r) for r in MATRIX_SEARCH) in summary.inconclusive_matrices


def test_run_conjecture_threads_deterministic():
    one = run_conjecture(t=2, c=3, max_entry=2, threads=1)
    four = run_conjecture(t=2, c=3, max_entry=2, threads=4)
    assert one.reports == four.reports
    assert summary_to_dict(one) == summary_to_dict(four)


def test_run_conjecture_with_zeros():
    summary = run_conjecture(t=2, c=2, max_entry=2, zero_free=False)
    assert summary.zero_free is False
    assert summary.contradictions == ()
    # the family contains matrices that only reduce to equal rows
    with_zero = [rep for rep in summary.reports if not rep.zero_free]
    assert with_zero
    assert any(rep.purity.status == "pure" and not rep.equal_rows for rep in with_zero)


def test_summary_to_dict():
    summary = run_conjecture(t=2, c=2, max_entry=2)
    d = summary_to_dict(summary)
    assert d["total"] == summary.total
    assert "reports" not in d
    d = summary_to_dict(summary, include_reports=True)
    assert len(d["reports"]) == summary.total
