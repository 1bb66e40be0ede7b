"""AHP and max-min fuzzy MCDM over pairwise comparison matrices, with a
harness comparing how the two methods' outputs move together."""

from .ahp import (
    CORPUS_RI,
    ConsistencyReport,
    RiTable,
    WeightVector,
    ahp_decide,
    ahp_normalize,
    ahp_weights,
    consistency,
    lambda_max,
)
from .fuzzy import FuzzyScoreVector, fuzzy_decide, fuzzy_normalize, fuzzy_scores
from .pcm import PairwiseMatrix, RatingScale, parse_matrix, serialize_matrix, validate
from .trend import ComparisonSeries, TransitionCategory, classify_series, classify_transition, summarize

__version__ = "0.1.0"
