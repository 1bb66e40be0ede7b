"""Embedded study datasets with their printed results."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache

from .. import pcm
from ..ahp import ahp_weights
from ..fuzzy import fuzzy_scores
from ..trend import CATEGORIES, ComparisonSeries, TransitionCategory
from . import data

__all__ = ["CorpusDataset", "DATASET_NAMES", "load_corpus", "get_dataset", "decision_rows", "export_corpus"]

DATASET_NAMES = ("Risk", "Customer", "Organization", "Policy", "Process", "Staff", "Tools", "Vendors")

@dataclass(frozen=True)
class CorpusDataset:
    name: str
    matrix: pcm.PairwiseMatrix
    expected_ahp: tuple[str, ...]
    expected_fuzzy: tuple[str, ...]
    expected_consistency: dict[str, str]
    expected_trend_row: dict[TransitionCategory, int]
    expected_decision: tuple[str, str] | None  # (AHP, fuzzy) winners, absent for Risk

    @property
    def labels(self) -> tuple[str, ...]:
        return self.matrix.labels

    def published_series(self) -> ComparisonSeries:
        """The curve pair as printed, which is what the observation counts were read from."""
        return ComparisonSeries(
            self.name, self.labels, [float(v) for v in self.expected_ahp], [float(v) for v in self.expected_fuzzy]
        )

    def computed_series(self) -> ComparisonSeries:
        m = self.matrix
        return ComparisonSeries.from_vectors(self.name, ahp_weights(m), fuzzy_scores(m))

    def expected_dict(self) -> dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "ahp_weights": [float(v) for v in self.expected_ahp],
            "fuzzy_scores": [float(v) for v in self.expected_fuzzy],
            "consistency": {k: float(v) for k, v in self.expected_consistency.items()},
            "decision": None
            if self.expected_decision is None
            else {"ahp": float(self.expected_decision[0]), "fuzzy": float(self.expected_decision[1])},
            "trend_row": {c.value: self.expected_trend_row.get(c, 0) for c in CATEGORIES},
            "trend_total": sum(self.expected_trend_row.values()),
        }


def _trend_row(counts) -> dict[TransitionCategory, int]:
    return dict(zip(CATEGORIES[:6], counts))


@lru_cache(maxsize=None)
def load_corpus() -> tuple[CorpusDataset, ...]:
    decisions = {name: (a, f) for name, a, f in data.DECISIONS}
    out = []
    for name in DATASET_NAMES:
        rows = getattr(data, f"{name.upper()}_MATRIX")
        printed = getattr(data, f"{name.upper()}_PRINTED")
        labels = [label for label, _ in rows]
        matrix = pcm.from_rows(labels, [r for _, r in rows])
        report = pcm.validate(matrix)
        if not report.valid:
            raise AssertionError(f"embedded dataset {name} is invalid: {report.errors}")
        lam, ci, ri, cr = data.CAPTIONS[name]
        out.append(
            CorpusDataset(
                name=name,
                matrix=matrix,
                expected_ahp=tuple(printed["ahp"].split()),
                expected_fuzzy=tuple(printed["fuzzy"].split()),
                expected_consistency={"lambda_max": lam, "ci": ci, "ri": ri, "cr": cr},
                expected_trend_row=_trend_row(data.TREND_ROWS[name]),
                expected_decision=decisions.get(name),
            )
        )
    return tuple(out)


def get_dataset(name: str) -> CorpusDataset:
    for ds in load_corpus():
        if ds.name.lower() == name.lower():
            return ds
    raise KeyError(f"no dataset named {name!r}; choose from {', '.join(DATASET_NAMES)}")


def decision_rows() -> list[tuple[str, str, str]]:
    """(dataset, printed AHP winner, printed fuzzy winner) rows."""
    return list(data.DECISIONS)


def published_decision_series() -> ComparisonSeries:
    return ComparisonSeries(
        data.DECISION_SERIES_NAME,
        [n for n, _, _ in data.DECISIONS],
        [float(a) for _, a, _ in data.DECISIONS],
        [float(f) for _, _, f in data.DECISIONS],
    )


def export_corpus(directory) -> list[str]:
    """Write ``<name>.csv`` and ``<name>.expected.json`` per dataset; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for ds in load_corpus():
        csv_path = os.path.join(directory, f"{ds.name}.csv")
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(pcm.serialize_matrix(ds.matrix, "csv"))
        json_path = os.path.join(directory, f"{ds.name}.expected.json")
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(ds.expected_dict(), fh, indent=2)
            fh.write("\n")
        written += [csv_path, json_path]
    return written
