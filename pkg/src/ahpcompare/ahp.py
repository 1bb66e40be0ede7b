"""Classical AHP: column normalization, row-average weights, consistency.

Weights use the approximate row-average method throughout. ``lambda_max``
defaults to the column-sum estimator ``sum_i (A w)_i``; the ratio-mean and
power-iteration estimators are available for comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Mapping

import numpy as np

from .pcm import PairwiseMatrix
from .vectors import LabeledVector

__all__ = [
    "AhpNormalizedMatrix",
    "WeightVector",
    "RiTable",
    "ConsistencyReport",
    "DegenerateWeight",
    "RiUnavailable",
    "CORPUS_RI",
    "ahp_normalize",
    "ahp_weights",
    "ahp_decide",
    "lambda_max",
    "principal_eigenvalue",
    "consistency",
]

LambdaMethod = Literal["column-sum", "ratio-mean", "eigen"]


class DegenerateWeight(ArithmeticError):
    pass


class RiUnavailable(LookupError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"no random index for n={n}; supply one with --ri {n}=<value>")


@dataclass(frozen=True, eq=False)
class AhpNormalizedMatrix:
    labels: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float, copy=True)
        entries.setflags(write=False)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "entries", entries)


class WeightVector(LabeledVector):
    """AHP priorities; they sum to 1."""


def ahp_normalize(matrix: PairwiseMatrix) -> AhpNormalizedMatrix:
    a = matrix.entries
    return AhpNormalizedMatrix(matrix.labels, a / a.sum(axis=0))


def ahp_weights(matrix: PairwiseMatrix) -> WeightVector:
    normalized = ahp_normalize(matrix).entries
    n = matrix.n
    # fsum keeps the all-ones case exact and weight sums at 1 to the last ulp
    w = np.array([math.fsum(row) / n for row in normalized])
    return WeightVector(matrix.labels, w)


def ahp_decide(weights: WeightVector) -> tuple[str, float]:
    return weights.argmax()


def principal_eigenvalue(matrix: PairwiseMatrix, tol: float = 1e-14, max_iter: int = 100_000) -> tuple[float, np.ndarray]:
    """Perron root and unit-sum eigenvector of a positive matrix by power iteration."""
    a = matrix.entries
    v = np.full(matrix.n, 1.0 / matrix.n)
    lam = 0.0
    for _ in range(max_iter):
        av = a @ v
        lam_next = av.sum()  # v sums to 1
        v_next = av / lam_next
        if np.max(np.abs(v_next - v)) < tol:
            return float(lam_next), v_next
        v, lam = v_next, lam_next
    return float(lam), v


def lambda_max(
    matrix: PairwiseMatrix,
    weights: WeightVector | None = None,
    method: LambdaMethod = "column-sum",
) -> float:
    """Estimate the principal eigenvalue used by the consistency index.

    ``column-sum``: sum of ``A w``, equivalently column sums dotted with the
    weights. ``ratio-mean``: mean of ``(A w)_i / w_i``. ``eigen``: power
    iteration on ``A``, ignoring ``weights``.
    """
    if method == "eigen":
        return principal_eigenvalue(matrix)[0]
    if weights is None:
        weights = ahp_weights(matrix)
    if weights.labels != matrix.labels:
        raise ValueError("weights were not derived from this matrix")
    w = weights.values
    if np.any(w <= 0):
        raise DegenerateWeight("weights must be strictly positive")
    if method == "column-sum":
        return math.fsum(matrix.entries.sum(axis=0) * w)
    if method == "ratio-mean":
        return math.fsum((matrix.entries @ w) / w) / matrix.n
    raise ValueError(f"unknown lambda_max method {method!r}")


@dataclass(frozen=True)
class RiTable:
    """Random index by matrix order, with where each value came from."""

    values: Mapping[int, float]
    provenance: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        for n, ri in self.values.items():
            if not ri > 0:
                raise ValueError(f"random index for n={n} must be positive, got {ri}")

    def lookup(self, n: int) -> float:
        try:
            return float(self.values[n])
        except KeyError:
            raise RiUnavailable(n) from None

    def with_overrides(self, overrides: Mapping[int, float]) -> "RiTable":
        values = dict(self.values)
        prov = dict(self.provenance)
        for n, ri in overrides.items():
            values[int(n)] = float(ri)
            prov[int(n)] = "user-supplied"
        return RiTable(values, prov)


# Random indices printed alongside the nine study datasets. They differ from
# Saaty's table (1.19 vs 1.12 at n=5), so no other orders are filled in.
_CORPUS_RI_VALUES = {5: 1.19, 6: 1.32, 7: 1.41, 9: 1.54, 14: 1.70, 15: 1.72}
CORPUS_RI = RiTable(_CORPUS_RI_VALUES, {n: "corpus" for n in _CORPUS_RI_VALUES})


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    lambda_max: float
    ci: float
    ri: float
    cr: float
    acceptable: bool
    threshold: float = 0.1
    method: str = "column-sum"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda_max": self.lambda_max,
            "ci": self.ci,
            "ri": self.ri,
            "cr": self.cr,
            "acceptable": self.acceptable,
            "threshold": self.threshold,
            "method": self.method,
            "display": {
                "lambda_max": round(self.lambda_max, 2),
                "ci": round(self.ci, 2),
                "ri": round(self.ri, 2),
                "cr": round(self.cr, 2),
            },
        }


def consistency(
    matrix: PairwiseMatrix,
    ri_table: RiTable | None = None,
    threshold: float = 0.1,
    *,
    ri: float | None = None,
    method: LambdaMethod = "column-sum",
) -> ConsistencyReport:
    """CI = (lambda_max - n)/(n - 1), CR = CI/RI, acceptable iff CR <= threshold.

    An explicit ``ri`` takes precedence over the table.
    """
    n = matrix.n
    if n < 2:
        raise ValueError("consistency needs n >= 2")
    if ri is None:
        ri = (ri_table or CORPUS_RI).lookup(n)
    elif not ri > 0:
        raise ValueError(f"random index must be positive, got {ri}")
    lam = lambda_max(matrix, method=method)
    ci = (lam - n) / (n - 1)
    cr = ci / ri
    return ConsistencyReport(n, lam, ci, float(ri), cr, bool(cr <= threshold), threshold, method)
