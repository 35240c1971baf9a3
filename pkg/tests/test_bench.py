import pytest

from domset.bench import COLUMNS, rows_to_csv, run_bench, run_instance, summarize


def check_row(r):
    assert r.purified + r.purification == r.greedy
    assert r.reduction_pct == pytest.approx(100 * (r.greedy - r.purified) / r.greedy)


def test_table_shaped_rows():
    rows = run_bench(5, (5800, 6000), 1.008, seed=7)
    assert [r.no for r in rows] == [1, 2, 3, 4, 5]
    for r in rows:
        assert 5800 <= r.n <= 6000
        assert r.m == round(1.008 * r.n)
        check_row(r)
        assert r.t_greedy is not None


def test_small_rows_with_exact():
    rows = run_bench(30, (10, 18), 1.3, seed=1, exact=True)
    for r in rows:
        check_row(r)
        assert r.gamma <= r.purified <= r.greedy
        assert r.purified_ratio == r.purified / r.gamma
    s = summarize(rows)
    assert s["solved"] == 30 and s["max_purified_ratio"] >= 1.0


def test_deterministic_and_independent_of_workers():
    a = run_bench(6, (20, 40), 1.5, seed=3)
    b = run_bench(6, (20, 40), 1.5, seed=3, jobs=3)
    strip = lambda rows: [(r.no, r.n, r.m, r.greedy, r.purified) for r in rows]
    assert strip(a) == strip(b)


def test_infeasible_instance_is_skipped():
    r = run_instance(1, 5, 20, 0)
    assert r.skipped and r.note.startswith("skipped")
    rows = run_bench(3, (4, 4), 0.5, seed=0)
    assert all(r.skipped for r in rows)
    assert summarize(rows)["mean_reduction_pct"] is None


def test_exact_skipped_above_limit():
    r = run_instance(1, 30, 40, 0, exact=True, limit=25)
    assert r.gamma is None and "exact skipped" in r.note


def test_empty_bench():
    assert run_bench(0, (5, 9), 1.0, seed=0) == []


def test_csv_columns():
    rows = run_bench(2, (8, 8), 1.0, seed=0)
    text = rows_to_csv(rows)
    assert text.splitlines()[0].split(",") == COLUMNS
    assert "t_greedy" not in rows_to_csv(rows, timings=False)
