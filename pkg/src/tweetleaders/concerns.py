"""Public-concern keyword annotation, cluster alignment, and the dependence test.

Five concerns are tracked; countermeasures carries two sub-concerns
(hygiene and mask) that stay separate in annotation but merge into a single
countermeasures column when building the cluster-by-concern table, so the
table keeps five categories.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._special import chi2_sf
from .corpus import porter

DEFAULT_CONCERN_KEYWORDS: dict[str, tuple[str, ...]] = {
    "symptoms": ("symptom",),
    "vaccination": ("vaccine", "vaccination"),
    "countermeasures:hygiene": ("hygiene", "wash", "hand"),
    "countermeasures:mask": ("mask",),
    "travel": ("travel", "flying", "fly", "airplane", "flight", "trip"),
    "pandemic": ("pandemic", "epidemic"),
}


def merged_concern_name(name: str) -> str:
    """Sub-concerns ("countermeasures:hygiene") roll up to their prefix."""
    return name.split(":", 1)[0]


@dataclass
class ConcernLexicon:
    """Concern name -> keyword tuple; keywords are stemmed at load so that
    surface variants ("traveling", "flights") match their keyword stem."""

    keywords: dict[str, tuple[str, ...]] = field(
        default_factory=lambda: dict(DEFAULT_CONCERN_KEYWORDS)
    )

    def __post_init__(self):
        for name, words in self.keywords.items():
            if not words:
                raise ValueError(f"concern {name!r} has no keywords")
            lowered = tuple(w.lower() for w in words)
            if lowered != tuple(words):
                raise ValueError(f"concern {name!r} keywords must be lowercase")
        self.stemmed: dict[str, frozenset[str]] = {
            name: frozenset(porter.stem(w) for w in words)
            for name, words in self.keywords.items()
        }

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.keywords)

    @property
    def merged_names(self) -> tuple[str, ...]:
        seen: list[str] = []
        for name in self.keywords:
            merged = merged_concern_name(name)
            if merged not in seen:
                seen.append(merged)
        return tuple(seen)

    @classmethod
    def from_mapping(cls, mapping) -> "ConcernLexicon":
        """Build from a `[concerns]` config table of keyword arrays."""
        return cls({str(k): tuple(v) for k, v in mapping.items()})


def annotate_concerns(tweet, lexicon: ConcernLexicon | None = None) -> frozenset[str]:
    """Concern labels for a tweet: a concern applies iff any of its stemmed
    keywords occurs among the tweet's stemmed tokens. Multi-label; possibly
    empty. Accepts a CleanTweet or a plain iterable of stemmed tokens."""
    lexicon = lexicon or ConcernLexicon()
    tokens = set(getattr(tweet, "tokens", tweet))
    return frozenset(
        name for name, stems in lexicon.stemmed.items() if tokens & stems
    )


@dataclass
class ContingencyTable:
    """Cluster-by-concern tweet counts."""

    rows: tuple[str, ...]
    cols: tuple[str, ...]
    counts: np.ndarray

    def shares(self) -> np.ndarray:
        totals = self.counts.sum(axis=1, keepdims=True)
        return self.counts / totals


def concern_alignment(
    labels_per_tweet,
    cluster_per_tweet,
    lexicon: ConcernLexicon | None = None,
) -> ContingencyTable:
    """Count tweets per (cluster, merged concern).

    A tweet labeled with k concerns lands in k cells; a tweet whose labels
    merge to the same column (hygiene and mask) counts once there. Clusters
    with no labeled tweets are omitted so every returned row normalizes.
    """
    lexicon = lexicon or ConcernLexicon()
    labels_per_tweet = list(labels_per_tweet)
    cluster_per_tweet = list(cluster_per_tweet)
    if len(labels_per_tweet) != len(cluster_per_tweet):
        raise ValueError("labels and cluster assignments must align")
    cols = lexicon.merged_names
    col_index = {name: j for j, name in enumerate(cols)}
    tallies: dict[str, np.ndarray] = {}
    for labels, cluster in zip(labels_per_tweet, cluster_per_tweet):
        merged = {merged_concern_name(name) for name in labels}
        if not merged:
            continue
        row = tallies.setdefault(str(cluster), np.zeros(len(cols), dtype=np.int64))
        for name in merged:
            row[col_index[name]] += 1
    if not tallies:
        raise ValueError("empty contingency: no tweet carries a concern label")
    rows = tuple(sorted(tallies))
    counts = np.vstack([tallies[r] for r in rows])
    return ContingencyTable(rows=rows, cols=cols, counts=counts)


@dataclass
class ChiSquareResult:
    statistic: float
    df: int
    p_value: float
    alpha: float
    reject_null: bool

    def as_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "df": self.df,
            "p_value": self.p_value,
            "alpha": self.alpha,
            "reject_null": self.reject_null,
        }

    def to_json(self, path) -> None:
        Path(path).write_text(json.dumps(self.as_dict(), indent=2) + "\n")


def chi_square_independence(table, alpha: float = 0.05) -> ChiSquareResult:
    """Pearson chi-square test of independence on an r x c count table.

    Expects every expected cell count to be positive; the p-value is the
    upper chi-square tail computed via the regularized incomplete gamma
    function.
    """
    counts = table.counts if isinstance(table, ContingencyTable) else np.asarray(table, dtype=float)
    counts = np.asarray(counts, dtype=float)
    if counts.ndim != 2 or counts.shape[0] < 2 or counts.shape[1] < 2:
        raise ValueError("contingency table must be at least 2x2")
    if (counts < 0).any():
        raise ValueError("counts must be non-negative")
    row_tot = counts.sum(axis=1, keepdims=True)
    col_tot = counts.sum(axis=0, keepdims=True)
    grand = counts.sum()
    if grand == 0:
        raise ValueError("degenerate table: all cells zero")
    expected = row_tot @ col_tot / grand
    if (expected == 0).any():
        raise ValueError("degenerate table: some expected count is zero")
    statistic = float(((counts - expected) ** 2 / expected).sum())
    df = (counts.shape[0] - 1) * (counts.shape[1] - 1)
    p_value = chi2_sf(statistic, df)
    return ChiSquareResult(
        statistic=statistic,
        df=df,
        p_value=p_value,
        alpha=alpha,
        reject_null=bool(p_value < alpha),
    )
