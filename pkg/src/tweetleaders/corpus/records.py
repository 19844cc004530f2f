"""Tweet record types shared across the pipeline."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp into a naive UTC datetime.

    Accepts a trailing "Z" (not understood by fromisoformat on 3.10) and
    any explicit offset; offset-aware values are converted to UTC.
    """
    if value.endswith(("Z", "z")):
        value = value[:-1] + "+00:00"
    dt = datetime.fromisoformat(value)
    if dt.tzinfo is not None:
        dt = dt.astimezone(timezone.utc).replace(tzinfo=None)
    return dt


@dataclass(frozen=True)
class RawTweet:
    """One ingested tweet record before any text processing."""

    id: str
    author: str
    created_at: datetime
    text: str
    retweeted_author: str | None = None

    @property
    def is_retweet(self) -> bool:
        return self.retweeted_author is not None


@dataclass(frozen=True)
class CleanTweet:
    """A tweet after normalization, tokenization and stemming.

    `tokens` are stemmed and drive topic/concern/classification paths;
    `unstemmed_tokens` go through the same pipeline minus stemming and feed
    the emotion lexicon, whose entries are surface words.
    """

    id: str
    author: str
    created_at: datetime
    tokens: tuple[str, ...]
    unstemmed_tokens: tuple[str, ...]

    @property
    def clean_text(self) -> str:
        return " ".join(self.tokens)

    def month_key(self) -> str:
        return f"{self.created_at.year:04d}-{self.created_at.month:02d}"


@dataclass
class IngestStats:
    """Corpus-level ingest counters (the dataset-description table analog).

    distinct_users counts every handle seen as an author or as a retweet
    target, matching the node set of the retweet network.
    """

    total: int = 0
    originals: int = 0
    retweets: int = 0
    distinct_users: int = 0
    malformed_skipped: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "total": self.total,
            "originals": self.originals,
            "retweets": self.retweets,
            "distinct_users": self.distinct_users,
            "malformed_skipped": self.malformed_skipped,
        }
