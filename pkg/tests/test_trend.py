import pytest

from ahpcompare.corpus import get_dataset, published_decision_series
from ahpcompare.trend import (
    ComparisonSeries,
    NoObservations,
    SeriesTooShort,
    TransitionCategory as T,
    classify_series,
    classify_transition,
    count_series,
    decision_series,
    summarize,
)


def test_classify_transition_signs():
    assert classify_transition(0.01, 0.1) is T.BOTH_INCREASE
    assert classify_transition(0.01, -0.1) is T.AHP_UP_FUZZY_DOWN
    assert classify_transition(-0.01, 0.1) is T.AHP_DOWN_FUZZY_UP
    assert classify_transition(-0.01, -0.1) is T.BOTH_DECREASE
    assert classify_transition(0.25 - 0.116, 0.0) is T.FUZZY_UNCHANGED
    assert classify_transition(0.0, -0.2) is T.AHP_UNCHANGED
    assert classify_transition(1e-12, -1e-12) is T.BOTH_UNCHANGED
    assert classify_transition(0.23 - 0.25, 0.33 - 0.12) is T.AHP_DOWN_FUZZY_UP
    with pytest.raises(ValueError):
        classify_transition(1, 1, epsilon=-1)


def test_epsilon_boundary():
    assert classify_transition(0.05, 0.5, epsilon=0.05) is T.FUZZY_UNCHANGED.swapped()
    assert classify_transition(0.0500001, 0.5, epsilon=0.05) is T.BOTH_INCREASE


# hand classification of the printed Risk curves, one entry per step
RISK_STEPS = [
    T.AHP_DOWN_FUZZY_UP,  # RELY->DURN  .085->.083, .33->.429
    T.AHP_UP_FUZZY_DOWN,  # DURN->CPLX  .083->.114, .429->.33
    T.FUZZY_UNCHANGED,    # CPLX->CPIS  .114->.051, .33 flat
    T.BOTH_DECREASE,      # CPIS->CADP  .051->.05,  .33->.11
    T.FUZZY_UNCHANGED,    # CADP->SCAP
    T.FUZZY_UNCHANGED,    # SCAP->WSZE
    T.FUZZY_UNCHANGED,    # WSZE->WSKL
    T.AHP_DOWN_FUZZY_UP,  # WSKL->SEXP
    T.BOTH_INCREASE,      # SEXP->UMTG
    T.BOTH_DECREASE,      # UMTG->SCED
    T.BOTH_DECREASE,      # SCED->PMEX
    T.AHP_DOWN_FUZZY_UP,  # PMEX->PDTH
    T.BOTH_INCREASE,      # PDTH->RISK
    T.BOTH_DECREASE,      # RISK->RVOL
]


def test_risk_printed_series():
    series = get_dataset("Risk").published_series()
    assert classify_series(series) == RISK_STEPS
    counts = count_series(series)
    assert counts.total == 14
    assert counts.get(T.AHP_UP_FUZZY_DOWN) == 1 and counts.get(T.BOTH_DECREASE) == 4


def test_customer_printed_series():
    c = count_series(get_dataset("Customer").published_series())
    assert {k: v for k, v in c.counts.items() if v} == {
        T.AHP_DOWN_FUZZY_UP: 1,
        T.BOTH_DECREASE: 2,
        T.FUZZY_UNCHANGED: 1,
    }


def test_constant_series():
    s = ComparisonSeries("flat", "abc", [0.2] * 3, [0.5] * 3)
    assert classify_series(s) == [T.BOTH_UNCHANGED] * 2


def test_series_validation():
    with pytest.raises(SeriesTooShort):
        ComparisonSeries("one", "a", [1], [1])
    with pytest.raises(ValueError):
        ComparisonSeries("bad", "ab", [1, 2], [1])


def test_summarize_single_step():
    s = summarize([ComparisonSeries("up", "ab", [0.1, 0.2], [0.3, 0.4])])
    assert s.total == 1
    assert s.aggregate() == (100.0, 0.0, 0.0)
    with pytest.raises(NoObservations):
        summarize([])


def test_decision_series():
    s = published_decision_series()
    assert s.ahp_values == (0.25, 0.188, 0.182, 0.162, 0.128, 0.088, 0.187)
    c = count_series(s)
    assert {k: v for k, v in c.counts.items() if v} == {T.BOTH_INCREASE: 1, T.AHP_DOWN_FUZZY_UP: 2, T.BOTH_DECREASE: 3}
    flat = decision_series([("x", 0.2, 0.5), ("y", 0.2, 0.5)])
    assert classify_series(flat) == [T.BOTH_UNCHANGED]
    with pytest.raises(SeriesTooShort):
        decision_series([("x", 0.2, 0.5)])


def test_summary_serialization():
    s = summarize([get_dataset("Customer").published_series(), published_decision_series()])
    d = s.to_dict()
    assert d["total"] == 10
    assert sum(d["counts"].values()) == 10
    assert abs(sum(d["percentages"].values()) - 100) < 1e-9
    lines = s.to_csv().splitlines()
    assert lines[0].split(",")[0] == "series" and lines[0].endswith("total")
    assert lines[1].startswith("Customer,0,0,1,2,1,0,0,4")
    assert lines[-1].startswith("(pooled)")
    assert "Same direction" in s.to_text()
