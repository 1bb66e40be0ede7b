"""Agreement analysis between AHP and fuzzy output curves.

Walking the criteria in label order, every step between neighbours is
classified by the direction each method's value moves. Pooling the steps over
several series gives the co-movement rates.
"""
from __future__ import annotations

import csv
import enum
import io
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TransitionCategory",
    "ComparisonSeries",
    "SeriesCounts",
    "TrendSummary",
    "SeriesTooShort",
    "NoObservations",
    "DEFAULT_EPSILON",
    "classify_transition",
    "classify_series",
    "count_series",
    "summarize",
    "decision_series",
]

DEFAULT_EPSILON = 1e-9


class SeriesTooShort(ValueError):
    pass


class NoObservations(ValueError):
    pass


class TransitionCategory(enum.Enum):
    BOTH_INCREASE = "BothIncrease"
    AHP_UP_FUZZY_DOWN = "AhpUpFuzzyDown"
    AHP_DOWN_FUZZY_UP = "AhpDownFuzzyUp"
    BOTH_DECREASE = "BothDecrease"
    FUZZY_UNCHANGED = "FuzzyUnchanged"
    AHP_UNCHANGED = "AhpUnchanged"
    BOTH_UNCHANGED = "BothUnchanged"

    def swapped(self) -> "TransitionCategory":
        """The category seen when the AHP and fuzzy roles are exchanged."""
        return _SWAP.get(self, self)


_SWAP = {
    TransitionCategory.AHP_UP_FUZZY_DOWN: TransitionCategory.AHP_DOWN_FUZZY_UP,
    TransitionCategory.AHP_DOWN_FUZZY_UP: TransitionCategory.AHP_UP_FUZZY_DOWN,
    TransitionCategory.FUZZY_UNCHANGED: TransitionCategory.AHP_UNCHANGED,
    TransitionCategory.AHP_UNCHANGED: TransitionCategory.FUZZY_UNCHANGED,
}

CATEGORIES = tuple(TransitionCategory)

HEADINGS = {
    TransitionCategory.BOTH_INCREASE: "Increase in AHP, increase in Fuzzy",
    TransitionCategory.AHP_UP_FUZZY_DOWN: "Increase in AHP, decrease in Fuzzy",
    TransitionCategory.AHP_DOWN_FUZZY_UP: "Decrease in AHP, increase in Fuzzy",
    TransitionCategory.BOTH_DECREASE: "Decrease in AHP, decrease in Fuzzy",
    TransitionCategory.FUZZY_UNCHANGED: "Increase or decrease in AHP, Fuzzy unchanged",
    TransitionCategory.AHP_UNCHANGED: "Increase or decrease in Fuzzy, AHP unchanged",
    TransitionCategory.BOTH_UNCHANGED: "Both unchanged",
}

_BY_SIGNS = {
    (1, 1): TransitionCategory.BOTH_INCREASE,
    (1, -1): TransitionCategory.AHP_UP_FUZZY_DOWN,
    (-1, 1): TransitionCategory.AHP_DOWN_FUZZY_UP,
    (-1, -1): TransitionCategory.BOTH_DECREASE,
    (1, 0): TransitionCategory.FUZZY_UNCHANGED,
    (-1, 0): TransitionCategory.FUZZY_UNCHANGED,
    (0, 1): TransitionCategory.AHP_UNCHANGED,
    (0, -1): TransitionCategory.AHP_UNCHANGED,
    (0, 0): TransitionCategory.BOTH_UNCHANGED,
}


def _sign(delta: float, epsilon: float) -> int:
    if abs(delta) <= epsilon:
        return 0
    return 1 if delta > 0 else -1


def classify_transition(ahp_delta: float, fuzzy_delta: float, epsilon: float = DEFAULT_EPSILON) -> TransitionCategory:
    if epsilon < 0:
        raise ValueError("epsilon must be non-negative")
    return _BY_SIGNS[_sign(ahp_delta, epsilon), _sign(fuzzy_delta, epsilon)]


@dataclass(frozen=True)
class ComparisonSeries:
    name: str
    labels: tuple[str, ...]
    ahp_values: tuple[float, ...]
    fuzzy_values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "ahp_values", tuple(float(v) for v in self.ahp_values))
        object.__setattr__(self, "fuzzy_values", tuple(float(v) for v in self.fuzzy_values))
        if not len(self.labels) == len(self.ahp_values) == len(self.fuzzy_values):
            raise ValueError(
                f"series {self.name!r}: {len(self.labels)} labels, "
                f"{len(self.ahp_values)} AHP values, {len(self.fuzzy_values)} fuzzy values"
            )
        if len(self.labels) < 2:
            raise SeriesTooShort(f"series {self.name!r} needs at least 2 points")

    @classmethod
    def from_vectors(cls, name: str, weights, scores) -> "ComparisonSeries":
        if tuple(weights.labels) != tuple(scores.labels):
            raise ValueError("weight and score labels differ")
        return cls(name, weights.labels, weights.values, scores.values)

    def swapped(self) -> "ComparisonSeries":
        return ComparisonSeries(self.name, self.labels, self.fuzzy_values, self.ahp_values)

    def __len__(self) -> int:
        return len(self.labels)


def classify_series(series: ComparisonSeries, epsilon: float = DEFAULT_EPSILON) -> list[TransitionCategory]:
    a, f = series.ahp_values, series.fuzzy_values
    return [classify_transition(a[i + 1] - a[i], f[i + 1] - f[i], epsilon) for i in range(len(a) - 1)]


@dataclass(frozen=True)
class SeriesCounts:
    name: str
    counts: dict[TransitionCategory, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, category: TransitionCategory) -> int:
        return self.counts.get(category, 0)

    def to_dict(self) -> dict:
        return {"name": self.name, "counts": {c.value: self.get(c) for c in CATEGORIES}, "total": self.total}


def count_series(series: ComparisonSeries, epsilon: float = DEFAULT_EPSILON) -> SeriesCounts:
    counted = Counter(classify_series(series, epsilon))
    return SeriesCounts(series.name, {c: counted.get(c, 0) for c in CATEGORIES})


@dataclass(frozen=True)
class TrendSummary:
    series: tuple[SeriesCounts, ...]
    counts: dict[TransitionCategory, int]
    total: int

    def percentage(self, category: TransitionCategory) -> float:
        return 100.0 * self.counts.get(category, 0) / self.total

    @property
    def percentages(self) -> dict[TransitionCategory, float]:
        return {c: self.percentage(c) for c in CATEGORIES}

    @property
    def same_direction(self) -> float:
        return self.percentage(TransitionCategory.BOTH_INCREASE) + self.percentage(TransitionCategory.BOTH_DECREASE)

    @property
    def reverse_swing(self) -> float:
        return self.percentage(TransitionCategory.AHP_UP_FUZZY_DOWN) + self.percentage(TransitionCategory.AHP_DOWN_FUZZY_UP)

    @property
    def one_unchanged(self) -> float:
        return self.percentage(TransitionCategory.FUZZY_UNCHANGED) + self.percentage(TransitionCategory.AHP_UNCHANGED)

    @property
    def both_unchanged(self) -> float:
        return self.percentage(TransitionCategory.BOTH_UNCHANGED)

    def aggregate(self) -> tuple[float, float, float]:
        return self.same_direction, self.reverse_swing, self.one_unchanged

    def to_dict(self) -> dict:
        return {
            "series": [s.to_dict() for s in self.series],
            "total": self.total,
            "counts": {c.value: self.counts.get(c, 0) for c in CATEGORIES},
            "percentages": {c.value: self.percentage(c) for c in CATEGORIES},
            "aggregate": {
                "same_direction": self.same_direction,
                "reverse_swing": self.reverse_swing,
                "one_unchanged": self.one_unchanged,
                "both_unchanged": self.both_unchanged,
            },
            "display": {
                "percentages": {c.value: f"{self.percentage(c):.2f}" for c in CATEGORIES},
                "aggregate": [f"{v:.2f}" for v in self.aggregate()],
            },
        }

    def to_csv(self) -> str:
        """One row per series plus a pooled row, one column per category."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["series"] + [c.value for c in CATEGORIES] + ["total"])
        for s in self.series:
            w.writerow([s.name] + [s.get(c) for c in CATEGORIES] + [s.total])
        w.writerow(["(pooled)"] + [self.counts.get(c, 0) for c in CATEGORIES] + [self.total])
        return buf.getvalue()

    def to_text(self) -> str:
        width = max([len(s.name) for s in self.series] + [8])
        short = ["II", "ID", "DI", "DD", "FU", "AU", "UU"]
        lines = [f"{'series':<{width}}  " + " ".join(f"{h:>3}" for h in short) + "  total"]
        for s in self.series:
            lines.append(f"{s.name:<{width}}  " + " ".join(f"{s.get(c):>3}" for c in CATEGORIES) + f"  {s.total:>5}")
        lines.append("")
        for c in CATEGORIES:
            lines.append(f"{HEADINGS[c]:<48} {self.percentage(c):6.2f}%")
        lines.append("")
        lines.append(f"{'Same direction':<48} {self.same_direction:6.2f}%")
        lines.append(f"{'Reverse swing':<48} {self.reverse_swing:6.2f}%")
        lines.append(f"{'One method unchanged':<48} {self.one_unchanged:6.2f}%")
        return "\n".join(lines) + "\n"


def summarize(all_series: Iterable[ComparisonSeries], epsilon: float = DEFAULT_EPSILON) -> TrendSummary:
    per_series = tuple(count_series(s, epsilon) for s in all_series)
    pooled: Counter = Counter()
    for s in per_series:
        pooled.update(s.counts)
    total = sum(pooled.values())
    if total == 0:
        raise NoObservations("no transitions to summarize")
    return TrendSummary(per_series, {c: pooled.get(c, 0) for c in CATEGORIES}, total)


def decision_series(
    per_dataset_results: Sequence[tuple[str, float, float]],
    name: str = "Few decision ratings",
) -> ComparisonSeries:
    """Series of each dataset's winning AHP weight and winning fuzzy score."""
    if len(per_dataset_results) < 2:
        raise SeriesTooShort("need at least 2 datasets")
    names, ahp, fz = zip(*per_dataset_results)
    if any(math.isnan(v) for v in ahp + fz):
        raise ValueError("decision values must be numbers")
    return ComparisonSeries(name, names, ahp, fz)
