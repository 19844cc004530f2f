"""Synthetic tweet-corpus generator with planted ground truth.

The real corpus cannot be redistributed, so verification runs on generated
fixtures instead: four author clusters with distinctive vocabularies,
cluster-skewed concern keywords and emotion words, hub-centered retweet
structure, and a sidecar recording the planted truth. Everything is drawn
from one seeded generator, so a spec plus seed pins the corpus byte for
byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timedelta
from pathlib import Path

import numpy as np

_SHARED_WORDS = (
    "coronavirus", "covid", "outbreak", "virus", "cases", "people",
    "country", "world", "spread", "response", "public", "week",
)

_EMOTION_POOLS = {
    # wide pools: each individual word stays rare in text while the scored
    # emotion shares aggregate them into one strong per-tweet signal
    "fear": (
        "fear", "afraid", "panic", "threat", "worry", "alarm", "scare",
        "scared", "dread", "fright", "terror", "horror", "danger",
        "dangerous", "anxious", "anxiety",
    ),
    "sadness": (
        "sad", "grief", "loss", "tragic", "mourn", "sorrow", "gloom",
        "misery", "lonely", "weep", "despair", "hurt", "upset",
        "miserable", "hopeless", "broken",
    ),
    "trust": (
        "trust", "safe", "protect", "reliable", "secure", "honest",
        "loyal", "faith", "calm", "respect", "assure", "reassure",
        "guardian", "defend", "strength",
    ),
    "anticipation": (
        "hope", "expect", "prepare", "plan", "ready", "eager", "await",
        "optimism", "alert", "careful", "nervous", "urgent",
    ),
    "joy": ("happy", "joy", "smile", "celebrate", "relief", "grateful", "cheer"),
    "anger": (
        "angry", "outrage", "blame", "rage", "furious", "mad", "hate",
        "hostile", "brutal", "cruel", "punish", "unfair",
    ),
    "surprise": ("shock", "sudden", "unexpected", "surprise", "astonish", "startle"),
    "disgust": ("disgust", "gross", "filthy", "fake", "poison", "waste"),
}

_CONCERN_SURFACE = {
    "symptoms": ("symptom", "symptoms"),
    "vaccination": ("vaccine", "vaccination", "vaccines"),
    "countermeasures:hygiene": ("wash", "washing", "hands", "hygiene"),
    "countermeasures:mask": ("mask", "masks"),
    "travel": ("travel", "traveling", "flight", "flights", "airplane", "trip"),
    "pandemic": ("pandemic", "epidemic"),
}


@dataclass
class ClusterSpec:
    name: str
    proportion: float
    n_authors: int
    n_hubs: int
    vocabulary: tuple[str, ...]
    concern_skew: dict[str, float]
    emotion_skew: dict[str, float]


def default_clusters() -> list[ClusterSpec]:
    """Four author blocks with a realistic crisis-discourse mix.

    Text alone cannot fully separate the blocks: news/politics draw mostly
    from a shared media vocabulary and health/research from a shared
    clinical one (repeated entries weight the draw). The emotion and
    concern signatures disambiguate within each pair, which is what gives
    the extra feature blocks genuine predictive value.
    """
    media = ("report", "press", "statement", "briefing", "announcement", "story")
    clinical = ("study", "patient", "data", "clinic", "treatment", "analysis")
    return [
        ClusterSpec(
            name="news",
            proportion=0.36,
            n_authors=24,
            n_hubs=3,
            vocabulary=media + media + ("headline", "coverage", "bulletin"),
            concern_skew={
                "pandemic": 0.45, "travel": 0.35,
                "countermeasures:hygiene": 0.05, "symptoms": 0.04,
                "vaccination": 0.04, "countermeasures:mask": 0.03,
            },
            emotion_skew={"sadness": 0.60, "fear": 0.40},
        ),
        ClusterSpec(
            name="health",
            proportion=0.33,
            n_authors=22,
            n_hubs=3,
            vocabulary=clinical + clinical + ("prevention", "advisory", "nurse"),
            concern_skew={
                "countermeasures:hygiene": 0.50, "countermeasures:mask": 0.20,
                "pandemic": 0.08, "symptoms": 0.06, "vaccination": 0.06,
                "travel": 0.03,
            },
            emotion_skew={"trust": 0.60, "fear": 0.40},
        ),
        ClusterSpec(
            name="research",
            proportion=0.18,
            n_authors=12,
            n_hubs=2,
            vocabulary=clinical + clinical + ("laboratory", "journal", "preprint"),
            concern_skew={
                "symptoms": 0.45, "vaccination": 0.40, "pandemic": 0.08,
                "countermeasures:hygiene": 0.03, "travel": 0.02,
            },
            emotion_skew={"anticipation": 0.55, "sadness": 0.25, "fear": 0.20},
        ),
        ClusterSpec(
            name="politics",
            proportion=0.13,
            n_authors=10,
            n_hubs=2,
            vocabulary=media + media + ("election", "senate", "mandate"),
            concern_skew={
                "travel": 0.50, "countermeasures:hygiene": 0.35,
                "countermeasures:mask": 0.04, "pandemic": 0.03,
                "vaccination": 0.03, "symptoms": 0.03,
            },
            emotion_skew={"trust": 0.55, "sadness": 0.25, "fear": 0.20},
        ),
    ]


@dataclass
class FixtureSpec:
    n_tweets: int = 1000
    clusters: list[ClusterSpec] = field(default_factory=default_clusters)
    retweet_rate: float = 0.55
    intra_retweet_prob: float = 0.94
    text_drift_prob: float = 0.12
    start: datetime = datetime(2020, 2, 1)
    end: datetime = datetime(2020, 4, 30, 23, 59, 59)
    noise_url_prob: float = 0.25
    noise_mention_prob: float = 0.20
    noise_hashtag_prob: float = 0.20
    noise_slang_prob: float = 0.12
    seed: int = 7

    def __post_init__(self):
        total = sum(c.proportion for c in self.clusters)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"cluster proportions must sum to 1, got {total}")
        for cluster in self.clusters:
            if cluster.n_authors < 1 or not cluster.vocabulary:
                raise ValueError(f"degenerate cluster {cluster.name!r}")
            if cluster.n_hubs < 1 or cluster.n_hubs > cluster.n_authors:
                raise ValueError(f"cluster {cluster.name!r} hub count out of range")


def cluster_tweet_counts(n_tweets: int, proportions) -> list[int]:
    """floor(n * p) per cluster, remainder dealt by largest fractional part
    (earlier cluster wins fraction ties)."""
    raw = [n_tweets * p for p in proportions]
    counts = [int(x) for x in raw]
    remainder = n_tweets - sum(counts)
    order = sorted(range(len(raw)), key=lambda i: (-(raw[i] - counts[i]), i))
    for i in order[:remainder]:
        counts[i] += 1
    return counts


def _weighted_choice(rng, skew: dict[str, float]):
    names = list(skew)
    weights = np.array([skew[n] for n in names])
    return names[rng.choice(len(names), p=weights / weights.sum())]


def generate_fixture(spec: FixtureSpec) -> tuple[list[dict], dict]:
    """Return (tweet records, ground-truth sidecar)."""
    rng = np.random.default_rng(spec.seed)
    authors: dict[str, list[str]] = {}
    hubs: dict[str, list[str]] = {}
    for cluster in spec.clusters:
        names = [f"{cluster.name}_user{i:03d}" for i in range(cluster.n_authors)]
        authors[cluster.name] = names
        hubs[cluster.name] = names[: cluster.n_hubs]

    counts = cluster_tweet_counts(spec.n_tweets, [c.proportion for c in spec.clusters])
    span = (spec.end - spec.start).total_seconds()

    # interleave clusters deterministically so ids do not encode the label
    schedule: list[ClusterSpec] = []
    for cluster, count in zip(spec.clusters, counts):
        schedule.extend([cluster] * count)
    rng.shuffle(schedule)  # Generator.shuffle is seed-deterministic

    tweets: list[dict] = []
    tweet_cluster: dict[str, str] = {}
    seen_authors: set[str] = set()
    for i, cluster in enumerate(schedule):
        tweet_id = f"t{i:06d}"
        author = authors[cluster.name][rng.integers(len(authors[cluster.name]))]
        created = spec.start + timedelta(seconds=float(rng.random() * span))

        # drifted tweets borrow another cluster's vocabulary; their emotion
        # and concern signatures stay true to the author's cluster, which is
        # exactly the signal the non-text feature blocks are for
        vocab_source = cluster.vocabulary
        if rng.random() < spec.text_drift_prob:
            donors = [c for c in spec.clusters if c.name != cluster.name]
            vocab_source = donors[rng.integers(len(donors))].vocabulary
        words = list(rng.choice(vocab_source, size=int(rng.integers(2, 5))))
        words += list(rng.choice(_SHARED_WORDS, size=int(rng.integers(3, 7))))
        emotion = _weighted_choice(rng, cluster.emotion_skew)
        for _ in range(int(rng.integers(1, 3))):
            words.append(str(rng.choice(_EMOTION_POOLS[emotion])))
        for concern, prob in cluster.concern_skew.items():
            if rng.random() < prob:
                words.append(str(rng.choice(_CONCERN_SURFACE[concern])))
        words = [str(w) for w in words]
        rng.shuffle(words)

        text = " ".join(words)
        if rng.random() < spec.noise_slang_prob:
            text += " " + str(rng.choice(("pls", "smh", "fyi", "tbh")))
        if rng.random() < spec.noise_hashtag_prob:
            text += " #covid19"
        if rng.random() < spec.noise_mention_prob:
            text += " @somebody"
        if rng.random() < spec.noise_url_prob:
            text += " https://t.co/" + "".join(
                str(c) for c in rng.integers(0, 10, size=6)
            )

        record = {
            "id": tweet_id,
            "author": author,
            "created_at": created.isoformat() + "Z",
            "text": text,
        }
        # an author's first tweet always retweets a same-cluster hub, so no
        # author floats free of its planted block
        first_appearance = author not in seen_authors
        seen_authors.add(author)
        own_hubs = [h for h in hubs[cluster.name] if h != author]
        if first_appearance and own_hubs:
            record["retweeted_author"] = str(rng.choice(own_hubs))
        elif rng.random() < spec.retweet_rate:
            if rng.random() < spec.intra_retweet_prob:
                target_cluster = cluster.name
            else:
                others = [c.name for c in spec.clusters if c.name != cluster.name]
                target_cluster = str(rng.choice(others))
            target = str(rng.choice(hubs[target_cluster]))
            if target != author:
                record["retweeted_author"] = target
        tweets.append(record)
        tweet_cluster[tweet_id] = cluster.name

    truth = {
        "seed": spec.seed,
        "n_tweets": spec.n_tweets,
        "cluster_tweet_counts": dict(
            zip([c.name for c in spec.clusters], counts)
        ),
        "author_cluster": {
            name: cluster.name
            for cluster in spec.clusters
            for name in authors[cluster.name]
        },
        "hubs": hubs,
        "tweet_cluster": tweet_cluster,
    }
    return tweets, truth


def write_fixture(spec: FixtureSpec, corpus_path, truth_path) -> None:
    tweets, truth = generate_fixture(spec)
    with Path(corpus_path).open("w", encoding="utf-8") as fh:
        for record in tweets:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    Path(truth_path).write_text(json.dumps(truth, indent=2, sort_keys=True) + "\n")
