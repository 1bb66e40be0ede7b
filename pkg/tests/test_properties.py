import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ahpcompare import pcm
from ahpcompare.ahp import ahp_decide, ahp_normalize, ahp_weights, consistency, lambda_max
from ahpcompare.fuzzy import FuzzyNormalizedMatrix, fuzzy_decide, fuzzy_normalize, fuzzy_scores
from ahpcompare.trend import ComparisonSeries, TransitionCategory, classify_series, summarize

UNCHANGED = {TransitionCategory.FUZZY_UNCHANGED, TransitionCategory.AHP_UNCHANGED, TransitionCategory.BOTH_UNCHANGED}


@st.composite
def positive_matrices(draw, min_n=2, max_n=15, integer=False):
    n = draw(st.integers(min_n, max_n))
    if integer:
        elements = st.integers(1, 9).map(float)
    else:
        elements = st.floats(1 / 9, 9, allow_nan=False, allow_infinity=False)
    a = draw(arrays(np.float64, (n, n), elements=elements))
    np.fill_diagonal(a, 1.0)
    return pcm.from_rows([f"c{i}" for i in range(n)], a)


@st.composite
def series_pairs(draw):
    n = draw(st.integers(2, 12))
    vals = st.sampled_from([0.1, 0.2, 0.25, 0.33, 0.5, 0.6, 1.0])
    a = draw(st.lists(vals, min_size=n, max_size=n))
    f = draw(st.lists(vals, min_size=n, max_size=n))
    return ComparisonSeries("s", [f"c{i}" for i in range(n)], a, f)


@given(positive_matrices())
def test_ahp_columns_and_weights_sum_to_one(m):
    np.testing.assert_allclose(ahp_normalize(m).entries.sum(axis=0), 1.0, atol=1e-12)
    w = ahp_weights(m)
    assert abs(w.values.sum() - 1.0) < 1e-12
    assert w.labels == m.labels
    assert np.all((w.values > 0) & (w.values < 1))


@given(positive_matrices(), st.data())
def test_column_scaling_invariance(m, data):
    j = data.draw(st.integers(0, m.n - 1))
    k = data.draw(st.integers(-6, 6))
    a = m.entries.copy()
    a[:, j] *= 2.0**k  # power-of-two scaling is exact in binary floating point
    np.testing.assert_array_equal(ahp_normalize(pcm.from_rows(m.labels, a)).entries, ahp_normalize(m).entries)
    c = data.draw(st.floats(0.01, 100))
    a = m.entries.copy()
    a[:, j] *= c
    np.testing.assert_allclose(ahp_normalize(pcm.from_rows(m.labels, a)).entries, ahp_normalize(m).entries, rtol=1e-14)


@given(arrays(np.float64, st.integers(2, 15), elements=st.floats(0.05, 20)))
def test_consistent_matrix_recovers_weights(v):
    a = np.outer(v, 1.0 / v)
    m = pcm.from_rows([f"c{i}" for i in range(len(v))], a)
    np.testing.assert_allclose(ahp_weights(m).values, v / v.sum(), atol=1e-9)
    r = consistency(m, ri=1.0)
    assert abs(r.ci) < 1e-9
    assert abs(lambda_max(m, method="ratio-mean") - len(v)) < 1e-9


@given(positive_matrices())
def test_fuzzy_pair_maximum_is_one(m):
    f = fuzzy_normalize(m).entries
    assert np.all(np.maximum(f, f.T) == 1.0)
    assert np.all(np.diag(f) == 1.0)
    assert np.all((f > 0) & (f <= 1))


@given(positive_matrices(), st.integers(-8, 8), st.floats(0.01, 100))
def test_fuzzy_whole_matrix_scaling(m, k, c):
    base = fuzzy_normalize(m).entries
    exact = pcm.from_rows(m.labels, m.entries * 2.0**k)
    np.testing.assert_array_equal(fuzzy_normalize(exact).entries, base)
    approx = pcm.from_rows(m.labels, m.entries * c)
    np.testing.assert_allclose(fuzzy_normalize(approx).entries, base, rtol=1e-15)


@given(positive_matrices(), st.data())
def test_fuzzy_scores_monotone(m, data):
    f = fuzzy_normalize(m)
    i = data.draw(st.integers(0, m.n - 1))
    j = data.draw(st.integers(0, m.n - 1))
    raised = f.entries.copy()
    raised[i, j] = data.draw(st.floats(raised[i, j], 1.0))
    before = fuzzy_scores(f).values
    after = fuzzy_scores(FuzzyNormalizedMatrix(f.labels, raised)).values
    assert np.all(after >= before)


@given(positive_matrices(integer=True))
def test_fuzzy_score_one_iff_row_dominates(m):
    s = fuzzy_scores(m).values
    f = fuzzy_normalize(m).entries
    np.testing.assert_array_equal(s, f.min(axis=1))
    assert np.all((s > 0) & (s <= 1))
    a = m.entries
    for k in range(m.n):
        assert (s[k] == 1.0) == bool(np.all(a[k] >= a[:, k]))


@given(positive_matrices(integer=True), st.randoms(use_true_random=False))
def test_decisions_follow_permutation(m, rnd):
    order = list(range(m.n))
    rnd.shuffle(order)
    p = m.permuted(order)
    np.testing.assert_allclose(ahp_weights(p).values, ahp_weights(m).values[order], atol=1e-15)
    np.testing.assert_array_equal(fuzzy_scores(p).values, fuzzy_scores(m).values[order])
    w = ahp_weights(m)
    label, value = ahp_decide(w)
    assert value == w.values.max()
    assert np.isclose(ahp_decide(ahp_weights(p))[1], value, atol=1e-15)
    f_label, f_value = fuzzy_decide(fuzzy_scores(p))
    assert f_value == fuzzy_scores(m).values.max()
    assert fuzzy_scores(m)[f_label] == f_value


@given(series_pairs())
def test_trend_swap_antisymmetry(s):
    assert classify_series(s.swapped()) == [c.swapped() for c in classify_series(s)]


@given(series_pairs())
def test_trend_counts_sum(s):
    assert len(classify_series(s)) == len(s) - 1
    assert summarize([s]).total == len(s) - 1


@given(series_pairs(), st.floats(0, 0.5), st.floats(0, 0.5))
def test_epsilon_monotonicity(s, e1, e2):
    lo, hi = sorted((e1, e2))
    count = lambda eps: sum(c in UNCHANGED for c in classify_series(s, eps))
    assert count(hi) >= count(lo)


@settings(max_examples=50)
@given(st.lists(series_pairs(), min_size=1, max_size=5), st.randoms(use_true_random=False))
def test_summary_order_invariant(all_series, rnd):
    shuffled = list(all_series)
    rnd.shuffle(shuffled)
    a, b = summarize(all_series), summarize(shuffled)
    assert a.counts == b.counts and a.percentages == b.percentages
    assert abs(sum(a.percentages.values()) - 100) < 1e-9
