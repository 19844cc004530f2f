"""Tweet ingestion and text preprocessing."""

from .ingest import ingest_jsonl
from .normalize import (
    PreprocessConfig,
    TweetPreprocessor,
    bundled_slang,
    bundled_stopwords,
    normalize_text,
    preprocess_corpus,
    preprocess_tweet,
    tokenize_and_reduce,
)
from .porter import stem
from .records import CleanTweet, IngestStats, RawTweet, parse_timestamp
from .spelling import SpellCorrector

__all__ = [
    "CleanTweet",
    "IngestStats",
    "PreprocessConfig",
    "RawTweet",
    "SpellCorrector",
    "TweetPreprocessor",
    "bundled_slang",
    "bundled_stopwords",
    "ingest_jsonl",
    "normalize_text",
    "parse_timestamp",
    "preprocess_corpus",
    "preprocess_tweet",
    "stem",
    "tokenize_and_reduce",
]
