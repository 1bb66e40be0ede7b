"""Max-min fuzzy MCDM over a raw rating matrix.

Each rating is divided by the larger rating of its pair, so the stronger
direction of every pair becomes 1. A criterion's score is the minimum of its
normalized row and the decision is the criterion with the largest score.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pcm import PairwiseMatrix
from .vectors import LabeledVector

__all__ = ["FuzzyNormalizedMatrix", "FuzzyScoreVector", "fuzzy_normalize", "fuzzy_scores", "fuzzy_decide"]


@dataclass(frozen=True, eq=False)
class FuzzyNormalizedMatrix:
    labels: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float, copy=True)
        if entries.shape != (len(self.labels), len(self.labels)):
            raise ValueError(f"entries shape {entries.shape} does not match {len(self.labels)} labels")
        entries.setflags(write=False)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "entries", entries)


class FuzzyScoreVector(LabeledVector):
    """Row minima of the pair-normalized matrix, each in (0, 1]."""


def fuzzy_normalize(matrix: PairwiseMatrix) -> FuzzyNormalizedMatrix:
    a = matrix.entries
    return FuzzyNormalizedMatrix(matrix.labels, a / np.maximum(a, a.T))


def fuzzy_scores(normalized: FuzzyNormalizedMatrix | PairwiseMatrix) -> FuzzyScoreVector:
    """Row minima. A raw :class:`PairwiseMatrix` is pair-normalized first."""
    if isinstance(normalized, PairwiseMatrix):
        normalized = fuzzy_normalize(normalized)
    return FuzzyScoreVector(normalized.labels, normalized.entries.min(axis=1))


def fuzzy_decide(scores: FuzzyScoreVector) -> tuple[str, float]:
    return scores.argmax()
