"""Leader identification and concern analysis over retweet corpora.

A library plus CLI that ranks users in the retweet network by PageRank,
groups leaders into communities, scores tweet emotions against a lexicon,
annotates public concerns, fits topics by collapsed Gibbs LDA, tests
cluster/concern dependence, and classifies tweets into leader clusters.
"""

from . import classify, concerns, corpus, emotion, graph, pipeline, topics

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "classify",
    "concerns",
    "corpus",
    "emotion",
    "graph",
    "pipeline",
    "topics",
]
