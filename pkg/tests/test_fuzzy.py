from fractions import Fraction

import numpy as np
import pytest

import oracle
from ahpcompare import pcm
from ahpcompare.corpus import get_dataset
from ahpcompare.fuzzy import FuzzyNormalizedMatrix, FuzzyScoreVector, fuzzy_decide, fuzzy_normalize, fuzzy_scores


def test_normalize_pair(risk):
    f = fuzzy_normalize(risk)
    i, j = risk.index("RELY"), risk.index("DURN")
    assert f.entries[i, j] == 0.6
    assert f.entries[j, i] == 1.0


def test_diagonal_and_symmetric_pairs():
    m = pcm.from_rows("abc", [[1, 4, 2], [4, 1, 8], [6, 3, 1]])
    f = fuzzy_normalize(m).entries
    assert np.all(np.diag(f) == 1)
    assert f[0, 1] == f[1, 0] == 1
    assert f[0, 2] == pytest.approx(1 / 3)


def test_matches_exact_oracle():
    for name in ("Risk", "Customer", "Tools"):
        m = get_dataset(name).matrix
        rows = m.entries.astype(int).tolist()
        exact = np.array([[float(v) for v in r] for r in oracle.fuzzy_normalized(rows)])
        np.testing.assert_array_equal(fuzzy_normalize(m).entries, exact)
        assert fuzzy_scores(m).values.tolist() == [float(v) for v in oracle.fuzzy_scores(rows)]


def test_scores_risk(risk):
    s = fuzzy_scores(fuzzy_normalize(risk))
    assert Fraction(s["RELY"]).limit_denominator(100) == Fraction(1, 3)
    assert s["UMTG"] == 0.6
    assert fuzzy_decide(s) == ("UMTG", 0.6)


def test_scores_uniform():
    m = pcm.from_rows("abcd", np.ones((4, 4)))
    assert fuzzy_scores(m).values.tolist() == [1.0] * 4


def test_customer_recomputed(customer):
    s = fuzzy_scores(customer)
    # ENG, PIS, RMG, SRT agree with the printed comparison table
    assert [round(s[k], 2) for k in ("ENG", "PIS", "RMG", "SRT")] == [0.5, 0.38, 0.12, 0.33]
    # STF: a(STF,SRT) = a(SRT,STF) = 8, so its row is all ones
    assert s["STF"] == 1.0


def test_decide_printed_vectors():
    printed_customer = FuzzyScoreVector(("ENG", "PIS", "RMG", "STF", "SRT"), [0.5, 0.38, 0.12, 0.12, 0.33])
    assert fuzzy_decide(printed_customer) == ("ENG", 0.5)
    org = fuzzy_scores(get_dataset("Organization").matrix)
    label, value = fuzzy_decide(org)
    assert label == "BPN" and round(value, 2) == 0.83
    assert fuzzy_decide(FuzzyScoreVector("xyz", [0.5, 0.5, 0.5])) == ("x", 0.5)


def test_normalized_matrix_shape_checked():
    with pytest.raises(ValueError):
        FuzzyNormalizedMatrix(("a", "b"), np.ones((3, 3)))
