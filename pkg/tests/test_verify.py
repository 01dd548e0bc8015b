from math import comb

import pytest

from hibound.bounds import ell_bound, turan_spencer_bound
from hibound.errors import InvalidParams
from hibound.verify import (
    SweepResult,
    SweepSpec,
    check_cps_minus_one_edge,
    check_regular_ct_vs_ell,
    check_ts_below_5,
    check_ts_below_k,
    cps_threshold,
    reproduce_worked_examples,
    run_sweep,
)


def test_exhaustive_3uniform_on_5():
    res = run_sweep(SweepSpec((5, 5), (3, 3), "exhaustive", with_alpha=True))
    assert res.instances == 1024
    assert res.violations == []
    assert sum(c.instances for c in res.cells) == 1024
    assert [c.m for c in res.cells] == list(range(11))


def test_exhaustive_graphs_on_4():
    res = run_sweep(SweepSpec((4, 4), (2, 2), "exhaustive", with_alpha=True))
    assert res.instances == 64 and res.ok
    for c in res.cells:
        ell, turan, alpha = c.ranges["ell"], c.ranges["turan"], c.ranges["alpha"]
        assert ell[1] <= turan[0] <= alpha[0]
    assert res.dominance_counts["ell_vs_turan"]["wins"] == 0


def test_ell_beats_ts_somewhere_for_k3():
    res = run_sweep(SweepSpec((7, 9), (3, 4), "exhaustive", instances_per_cell=1))
    assert res.dominance_counts["ell_vs_turan_spencer"]["wins"] >= 1


def test_exhaustive_falls_back_to_sampling_per_m():
    res = run_sweep(SweepSpec((7, 7), (3, 3), "exhaustive", instances_per_cell=2))
    assert res.instances == 2 * (comb(7, 3) + 1)
    assert [c.m for c in res.cells] == list(range(comb(7, 3) + 1))


def test_regular_cell_shows_ct_below_ell():
    from hibound.hypergraph import random_regular
    from hibound.verify import check_instance

    res, cells = SweepResult(), {}
    check_instance(random_regular(6, 3, 7, seed=0), res, cells, True, 10**6)
    cell = cells[14]
    assert cell.ranges["caro_tuza"] == [2, 2] and cell.ranges["ell"] == [3, 3]
    assert res.dominance_counts["ell_vs_caro_tuza"]["wins"] == 1


def test_random_sweep_deterministic_and_parallel_invariant():
    spec = SweepSpec((5, 10), (2, 4), "random", instances_per_cell=20, seed=42, with_alpha=True)
    a = run_sweep(spec, workers=1)
    b = run_sweep(spec, workers=1)
    c = run_sweep(spec, workers=3)
    assert a == b == c
    assert a.to_json() == c.to_json()
    assert a.ok


def test_unexhausted_alpha_is_flagged():
    res = run_sweep(SweepSpec((12, 12), (3, 3), "random", instances_per_cell=3, with_alpha=True,
                              alpha_budget=2))
    assert res.ok
    assert len(res.flagged) == 3
    assert all("budget" in f["reason"] for f in res.flagged)


def test_violation_detection(monkeypatch):
    monkeypatch.setattr("hibound.bounds.ell_bound", lambda n, m, k: n)
    res = run_sweep(SweepSpec((4, 4), (2, 2), "exhaustive", with_alpha=True))
    assert not res.ok
    assert {v["bound"] for v in res.violations} == {"ell"}


@pytest.mark.parametrize("kwargs", [
    dict(n_range=(0, 3), k_range=(2, 2)),
    dict(n_range=(5, 3), k_range=(2, 2)),
    dict(n_range=(3, 5), k_range=(1, 2)),
    dict(n_range=(3, 5), k_range=(2, 2), m_policy="all"),
    dict(n_range=(3, 5), k_range=(2, 2), instances_per_cell=0),
])
def test_bad_spec(kwargs):
    with pytest.raises(InvalidParams):
        SweepSpec(**kwargs)


def test_example_ranges():
    a = check_ts_below_k()
    assert a.passed and a.details["checked"] > 0
    b = check_ts_below_5()
    assert b.passed and b.details["checked"] > 0


def test_example_range_point():
    # k=3, n=6, m=8 = 6^3/27 is the first m of the range
    assert turan_spencer_bound(6, 8, 3) == 2 < 3 <= ell_bound(6, 8, 3)


def test_example_regular_pairs():
    r = check_regular_ct_vs_ell()
    assert r.passed
    assert r.details == {"6,3,7": [2, 3], "6,4,6": [3, 4]}


def test_cps_check_and_threshold():
    n0, values = cps_threshold(40)
    assert n0 == 4
    assert values[3] == 3 and values[20] == 2
    r = check_cps_minus_one_edge()
    assert r.passed and r.details["threshold"] == 4
    assert r.details["ell_values"] == [3] and r.details["alpha_values"] == [3]


def test_reproduce_all():
    results = reproduce_worked_examples()
    assert [r.name for r in results] == [
        "ts_below_k_le_ell", "ts_below_5_le_ell", "regular_ct_below_ell", "cps_minus_one_edge"]
    assert all(r.passed for r in results)
