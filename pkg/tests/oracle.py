"""Exact rational re-implementations used as independent test oracles."""
from fractions import Fraction


def exact_rows(rows):
    return [[Fraction(v) for v in r] for r in rows]


def ahp_weights(rows):
    a = exact_rows(rows)
    n = len(a)
    col = [sum(a[i][j] for i in range(n)) for j in range(n)]
    return [sum(a[i][j] / col[j] for j in range(n)) / n for i in range(n)]


def column_sum_lambda(rows):
    a = exact_rows(rows)
    w = ahp_weights(rows)
    return sum(sum(a[i][j] * w[j] for j in range(len(a))) for i in range(len(a)))


def ratio_mean_lambda(rows):
    a = exact_rows(rows)
    w = ahp_weights(rows)
    n = len(a)
    return sum(sum(a[i][j] * w[j] for j in range(n)) / w[i] for i in range(n)) / n


def fuzzy_normalized(rows):
    a = exact_rows(rows)
    n = len(a)
    return [[a[i][j] / max(a[i][j], a[j][i]) for j in range(n)] for i in range(n)]


def fuzzy_scores(rows):
    return [min(r) for r in fuzzy_normalized(rows)]
