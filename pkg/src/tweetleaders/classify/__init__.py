"""Tweet-to-cluster classification: features, balancing, forest, evaluation."""

from .ablation import (
    FEATURE_SETS,
    CvReport,
    cross_validate_ablation,
    format_auc_cell,
    stratified_fold_indices,
)
from .features import (
    ColumnStandardizer,
    FeatureMatrix,
    assemble_features,
    concern_indicator_block,
    emotion_block,
)
from .forest import RandomForest
from .metrics import binary_auc, macro_auc_ovr
from .smote import SmoteOversampler
from .tfidf import TfidfVectorizer

__all__ = [
    "FEATURE_SETS",
    "ColumnStandardizer",
    "CvReport",
    "FeatureMatrix",
    "RandomForest",
    "SmoteOversampler",
    "TfidfVectorizer",
    "assemble_features",
    "binary_auc",
    "concern_indicator_block",
    "cross_validate_ablation",
    "emotion_block",
    "format_auc_cell",
    "macro_auc_ovr",
    "stratified_fold_indices",
]
