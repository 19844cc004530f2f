"""Lexicon-based emotion scoring over the eight basic emotions.

Scoring follows the unique-word rule: each distinct lexicon token in a tweet
contributes once to every emotion it is associated with, so repeating a word
never changes the profile. The emotion path reads the unstemmed token view,
because lexicon entries are surface words.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

EMOTIONS: tuple[str, ...] = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
)
_EMOTION_INDEX = {name: i for i, name in enumerate(EMOTIONS)}


@dataclass
class EmotionProfile:
    """Counts (or normalized shares) over the eight emotions."""

    counts: np.ndarray
    normalized: bool = False

    @classmethod
    def zero(cls) -> "EmotionProfile":
        return cls(np.zeros(len(EMOTIONS)))

    def normalize(self) -> "EmotionProfile":
        total = self.counts.sum()
        if total == 0:
            return EmotionProfile(self.counts.astype(float), normalized=True)
        return EmotionProfile(self.counts / total, normalized=True)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(EMOTIONS, self.counts.tolist()))

    def __add__(self, other: "EmotionProfile") -> "EmotionProfile":
        return EmotionProfile(self.counts + other.counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EmotionProfile)
            and self.normalized == other.normalized
            and np.array_equal(self.counts, other.counts)
        )


class EmotionLexicon:
    """word -> set of emotions, loaded from `word<TAB>emotion` rows."""

    def __init__(self, entries: dict[str, frozenset[str]]):
        for word, emotions in entries.items():
            if not word or word != word.lower():
                raise ValueError(f"lexicon word {word!r} must be lowercase and non-empty")
            unknown = emotions - set(EMOTIONS)
            if unknown:
                raise ValueError(f"unknown emotions {sorted(unknown)} for word {word!r}")
            if not emotions:
                raise ValueError(f"word {word!r} maps to no emotion")
        self.entries = dict(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def emotions_for(self, word: str) -> frozenset[str]:
        return self.entries.get(word, frozenset())

    @classmethod
    def from_tsv(cls, path) -> "EmotionLexicon":
        grouped: dict[str, set[str]] = {}
        with Path(path).open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                parts = line.rstrip("\n").split("\t")
                if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                    raise ValueError(f"{path}:{lineno}: expected 'word<TAB>emotion'")
                word, emotion = parts[0].strip().lower(), parts[1].strip().lower()
                if emotion not in _EMOTION_INDEX:
                    raise ValueError(f"{path}:{lineno}: unknown emotion {emotion!r}")
                grouped.setdefault(word, set()).add(emotion)
        return cls({w: frozenset(e) for w, e in grouped.items()})

    @classmethod
    @lru_cache(maxsize=1)
    def bundled(cls) -> "EmotionLexicon":
        with resources.as_file(
            resources.files("tweetleaders.data").joinpath("emotion_lexicon.tsv")
        ) as path:
            return cls.from_tsv(path)


def load_emotion_lexicon(path) -> EmotionLexicon:
    return EmotionLexicon.from_tsv(path)


def score_emotions(tweet, lexicon: EmotionLexicon) -> EmotionProfile:
    """Profile of a tweet: +1 per emotion for each DISTINCT matching token.

    Accepts a CleanTweet (scores its unstemmed tokens) or any token iterable.
    """
    tokens = getattr(tweet, "unstemmed_tokens", tweet)
    counts = np.zeros(len(EMOTIONS))
    for token in set(tokens):
        for emotion in lexicon.emotions_for(token):
            counts[_EMOTION_INDEX[emotion]] += 1
    return EmotionProfile(counts)


def aggregate_emotions(profiles, keys) -> dict:
    """Sum profiles per key and normalize each group to shares.

    Keys may be anything hashable (cluster ids, "YYYY-MM" strings). Groups
    are returned in sorted key order; empty input gives an empty mapping.
    """
    profiles = list(profiles)
    keys = list(keys)
    if len(profiles) != len(keys):
        raise ValueError("profiles and keys must align")
    sums: dict = {}
    for profile, key in zip(profiles, keys):
        if key in sums:
            sums[key] = sums[key] + profile
        else:
            sums[key] = profile
    return {key: sums[key].normalize() for key in sorted(sums)}


def save_emotion_shares_csv(groups: dict, path, group_column: str = "group") -> None:
    """`group,anger,...,trust` rows of normalized shares, sorted by group."""
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([group_column, *EMOTIONS])
        for key in sorted(groups, key=str):
            shares = groups[key].counts
            writer.writerow([key, *[f"{s:.12g}" for s in shares]])
