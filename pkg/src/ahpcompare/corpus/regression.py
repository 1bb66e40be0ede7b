"""Recompute every dataset and compare with the printed values.

Deltas are compared in exact rational arithmetic so a computed 1/8 against a
printed 0.12 sits exactly on a 0.005 tolerance instead of a float hair over.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Literal

from ..ahp import CORPUS_RI, ahp_decide, ahp_weights, consistency
from ..fuzzy import fuzzy_decide, fuzzy_scores
from ..trend import CATEGORIES, DEFAULT_EPSILON, ComparisonSeries, decision_series, summarize
from . import data, load_corpus, published_decision_series

TrendSource = Literal["published", "recomputed"]


@dataclass(frozen=True)
class ToleranceConfig:
    weights: float = 0.005
    scores: float = 0.005
    lambda_max: float = 0.10
    ci: float = 0.02
    cr: float = 0.02
    percent: float = 0.02
    cr_threshold: float = 0.1
    epsilon: float = DEFAULT_EPSILON


@dataclass(frozen=True)
class Cell:
    item: str
    observed: float | int | str
    expected: float | int | str
    delta: float | None = None
    tolerance: float | None = None
    ok: bool = True

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("item", "observed", "expected", "delta", "tolerance", "ok")}


@dataclass(frozen=True)
class Check:
    dataset: str
    check: str
    cells: tuple[Cell, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cells)

    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.ok]

    def max_delta(self) -> float:
        return max((c.delta for c in self.cells if c.delta is not None), default=0.0)

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "check": self.check,
            "passed": self.passed,
            "max_delta": self.max_delta(),
            "cells": [c.to_dict() for c in self.cells],
        }


@dataclass(frozen=True)
class RegressionReport:
    checks: tuple[Check, ...]
    tolerances: ToleranceConfig
    trend_source: str
    total_observations: int
    decision_table: tuple[tuple[str, str, float, str, float], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, dataset: str, check: str) -> Check:
        for c in self.checks:
            if c.dataset == dataset and c.check == check:
                return c
        raise KeyError((dataset, check))

    def by_check(self, check: str) -> list[Check]:
        return [c for c in self.checks if c.check == check]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "trend_source": self.trend_source,
            "total_observations": self.total_observations,
            "tolerances": self.tolerances.__dict__,
            "decisions": [
                {"dataset": d, "ahp_label": al, "ahp": av, "fuzzy_label": fl, "fuzzy": fv}
                for d, al, av, fl, fv in self.decision_table
            ],
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"trend source: {self.trend_source}; total observations: {self.total_observations}", ""]
        for c in self.checks:
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.dataset:<22} {c.check}")
            for cell in c.failures():
                extra = ""
                if cell.delta is not None:
                    extra = f" (delta {cell.delta:.6g} > {cell.tolerance:g})"
                lines.append(f"        {cell.item}: observed {_show(cell.observed)}, expected {_show(cell.expected)}{extra}")
        lines.append("")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _show(v) -> str:
    return f"{v:.6g}" if isinstance(v, float) else str(v)


def _within(observed: float, expected: str, tol: float) -> tuple[float, bool]:
    delta = abs(Fraction(observed) - Fraction(expected))
    return float(delta), delta <= Fraction(str(tol))


def _rounded(value: float, places: int) -> Decimal:
    return Decimal(value).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def _winners(labels, values) -> list[str]:
    top = max(values)
    return [label for label, v in zip(labels, values) if v == top]


def _vector_check(dataset: str, name: str, labels, observed, expected, tol: float) -> Check:
    cells = []
    for label, obs, exp in zip(labels, observed, expected):
        delta, ok = _within(float(obs), exp, tol)
        cells.append(Cell(label, float(obs), float(exp), delta, tol, ok))
    return Check(dataset, name, tuple(cells))


def _counts_check(name: str, counts, expected_row, expected_total: int) -> Check:
    cells = [
        Cell(cat.value, counts.get(cat), expected_row[k], ok=counts.get(cat) == expected_row[k])
        for k, cat in enumerate(CATEGORIES[:6])
    ]
    bu = CATEGORIES[6]
    cells.append(Cell(bu.value, counts.get(bu), 0, ok=counts.get(bu) == 0))
    cells.append(Cell("total", counts.total, expected_total, ok=counts.total == expected_total))
    return Check(name, "trend", tuple(cells))


def run_regression(
    tolerances: ToleranceConfig | None = None,
    trend_source: TrendSource = "published",
) -> RegressionReport:
    """Recompute all datasets and compare against the printed tables.

    ``trend_source`` picks the curves fed to the observation counts: the
    printed comparison tables (``published``) or this package's recomputed
    vectors (``recomputed``).
    """
    tol = tolerances or ToleranceConfig()
    if trend_source not in ("published", "recomputed"):
        raise ValueError(f"unknown trend source {trend_source!r}")
    checks: list[Check] = []
    series: list[ComparisonSeries] = []
    decisions: list[tuple[str, str, float, str, float]] = []

    for ds in load_corpus():
        m = ds.matrix
        w = ahp_weights(m)
        s = fuzzy_scores(m)
        checks.append(_vector_check(ds.name, "weights", m.labels, w.values, ds.expected_ahp, tol.weights))
        checks.append(_vector_check(ds.name, "scores", m.labels, s.values, ds.expected_fuzzy, tol.scores))

        a_label, a_val = ahp_decide(w)
        f_label, f_val = fuzzy_decide(s)
        published = ds.published_series()
        # printed ties (Process: NGP and POG both 0.162) admit several winners
        a_winners = _winners(published.labels, published.ahp_values)
        f_winners = _winners(published.labels, published.fuzzy_values)
        if ds.expected_decision is not None:
            exp_a, exp_f = ds.expected_decision
        else:
            exp_a = ds.expected_ahp[published.labels.index(a_winners[0])]
            exp_f = ds.expected_fuzzy[published.labels.index(f_winners[0])]
        a_rounded = _rounded(a_val, 3)
        f_rounded = _rounded(f_val, 2)
        checks.append(
            Check(
                ds.name,
                "decision",
                (
                    Cell("ahp_label", a_label, "|".join(a_winners), ok=a_label in a_winners),
                    Cell("ahp_value_3dp", str(a_rounded), exp_a, ok=a_rounded == Decimal(exp_a)),
                    Cell("fuzzy_label", f_label, "|".join(f_winners), ok=f_label in f_winners),
                    Cell("fuzzy_value_2dp", str(f_rounded), exp_f, ok=f_rounded == Decimal(exp_f)),
                ),
            )
        )
        if ds.expected_decision is not None:
            decisions.append((ds.name, a_label, a_val, f_label, f_val))

        cons = consistency(m, CORPUS_RI, tol.cr_threshold)
        exp = ds.expected_consistency
        cells = []
        for key, t in (("lambda_max", tol.lambda_max), ("ci", tol.ci), ("cr", tol.cr)):
            obs = getattr(cons, key)
            delta, ok = _within(obs, exp[key], t)
            cells.append(Cell(key, obs, float(exp[key]), delta, t, ok))
        cells.append(Cell("ri", cons.ri, float(exp["ri"]), ok=abs(cons.ri - float(exp["ri"])) < 1e-12))
        cells.append(Cell("acceptable", cons.acceptable, False, ok=cons.acceptable is False))
        checks.append(Check(ds.name, "consistency", tuple(cells)))

        series.append(published if trend_source == "published" else ds.computed_series())

    if trend_source == "published":
        series.append(published_decision_series())
    else:
        series.append(decision_series([(d, av, fv) for d, _, av, _, fv in decisions], data.DECISION_SERIES_NAME))

    summary = summarize(series, tol.epsilon)
    for counts in summary.series:
        checks.append(_counts_check(counts.name, counts, data.TREND_ROWS[counts.name], data.TREND_TOTALS[counts.name]))

    pooled_cells = [Cell("total", summary.total, sum(data.TREND_TOTALS.values()), ok=summary.total == sum(data.TREND_TOTALS.values()))]
    for cat, exp in zip(CATEGORIES[:6], data.POOLED_PERCENT):
        delta, ok = _within(summary.percentage(cat), exp, tol.percent)
        pooled_cells.append(Cell(cat.value, summary.percentage(cat), float(exp), delta, tol.percent, ok))
    checks.append(Check("(pooled)", "percentages", tuple(pooled_cells)))

    agg_cells = []
    for item, obs, exp in zip(("same_direction", "reverse_swing", "one_unchanged"), summary.aggregate(), data.AGGREGATE_PERCENT):
        delta, ok = _within(obs, exp, tol.percent)
        agg_cells.append(Cell(item, obs, float(exp), delta, tol.percent, ok))
    checks.append(Check("(pooled)", "aggregate", tuple(agg_cells)))

    return RegressionReport(tuple(checks), tol, trend_source, summary.total, tuple(decisions))
