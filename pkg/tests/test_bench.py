"""Tests for the formula-vs-oracle timing harness."""

import pytest

from cubepaths.bench import BenchReport, _coordinate_family, bench_compare, render_text, to_csv
from cubepaths.core import CanonicalOffset, Neighborhood
from cubepaths.counting import count_paths


def test_coordinate_family_doubles_and_includes_max():
    assert _coordinate_family(1) == [1]
    assert _coordinate_family(4) == [1, 2, 4]
    assert _coordinate_family(5) == [1, 2, 4, 5]
    assert _coordinate_family(20) == [1, 2, 4, 8, 16, 20]


def test_bench_small_run_agrees_everywhere():
    report = bench_compare(4)
    assert report.all_equal
    assert len(report.rows) == 9  # three m values x three neighborhoods
    for row in report.rows:
        assert row.oracle_count == row.formula_count
        assert row.equal is True
        assert row.formula_seconds >= 0.0
        assert row.oracle_seconds >= 0.0
        off = CanonicalOffset(row.m, row.m // 2, row.m // 4)
        assert row.formula_count == count_paths(off, row.neighborhood)


def test_bench_caps_the_oracle():
    report = bench_compare(8, oracle_cap=3)
    assert report.all_equal  # capped rows are inconclusive, not unequal
    capped = [row for row in report.rows if row.oracle_count is None]
    ran = [row for row in report.rows if row.oracle_count is not None]
    assert capped and ran
    for row in capped:
        assert row.distance > 3
        assert row.equal is None
        assert row.oracle_seconds is None
    for row in ran:
        assert row.distance <= 3


def test_bench_single_neighborhood():
    report = bench_compare(2, neighborhoods=(Neighborhood.N18,))
    assert {row.neighborhood for row in report.rows} == {Neighborhood.N18}


def test_bench_rejects_max_coord_below_one():
    with pytest.raises(ValueError):
        bench_compare(0)


def test_render_text_mentions_capped_rows():
    report = bench_compare(8, oracle_cap=3)
    text = render_text(report)
    lines = text.splitlines()
    assert lines[0].split() == ["m", "point", "n", "dist", "count", "formula_s", "oracle_s", "equal"]
    assert "oracle skipped for" in lines[-1]
    assert " NO" not in text


def test_render_text_equal_rows_say_yes():
    text = render_text(bench_compare(2))
    assert "yes" in text and "NO" not in text


def test_csv_has_exact_counts_and_empty_capped_cells():
    report = bench_compare(8, oracle_cap=3)
    lines = to_csv(report).splitlines()
    header = lines[0].split(",")
    assert header == [
        "m", "x", "y", "z", "neighborhood", "distance",
        "formula_count", "formula_seconds", "oracle_count", "oracle_seconds", "equal",
    ]
    by_fields = [line.split(",") for line in lines[1:]]
    for fields in by_fields:
        if fields[header.index("oracle_count")] == "":
            assert fields[header.index("equal")] == ""
        else:
            assert fields[header.index("equal")] == "true"
            assert fields[header.index("oracle_count")] == fields[header.index("formula_count")]


def test_all_equal_is_false_on_a_real_disagreement():
    report = bench_compare(2)
    bad_row = report.rows[0]
    forged = BenchReport(
        max_coord=report.max_coord,
        oracle_cap=report.oracle_cap,
        rows=(
            bad_row.__class__(
                m=bad_row.m,
                point=bad_row.point,
                neighborhood=bad_row.neighborhood,
                distance=bad_row.distance,
                formula_count=bad_row.formula_count,
                formula_seconds=bad_row.formula_seconds,
                oracle_count=bad_row.formula_count + 1,
                oracle_seconds=0.0,
            ),
        ),
    )
    assert not forged.all_equal
    assert "NO" in render_text(forged)
