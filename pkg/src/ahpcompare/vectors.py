from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np


@dataclass(frozen=True, eq=False)
class LabeledVector:
    """One value per criterion, in matrix label order."""

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        labels = tuple(self.labels)
        values = np.array(self.values, dtype=float, copy=True)
        if values.shape != (len(labels),):
            raise ValueError(f"{len(labels)} labels for values of shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[tuple[str, float]]:
        return iter(zip(self.labels, (float(v) for v in self.values)))

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.labels.index(label)])

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((type(self).__name__, self.labels, self.values.tobytes()))

    def as_dict(self) -> dict[str, float]:
        return dict(self)

    def argmax(self) -> tuple[str, float]:
        """Largest value and its label; the earliest label wins ties."""
        if not self.labels:
            raise ValueError("empty vector has no maximum")
        i = int(np.argmax(self.values))  # first occurrence
        return self.labels[i], float(self.values[i])
