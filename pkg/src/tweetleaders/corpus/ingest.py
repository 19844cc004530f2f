"""JSONL tweet ingestion.

One JSON object per line with fields `id`, `author`, `created_at`
(ISO-8601), `text` and optional `retweeted_author`. Malformed lines are
counted and skipped; only an unreadable file aborts.
"""

from __future__ import annotations

import json
from pathlib import Path

from .records import IngestStats, RawTweet, parse_timestamp


def _parse_record(obj) -> RawTweet:
    if not isinstance(obj, dict):
        raise ValueError("record is not an object")
    for key in ("id", "author", "created_at", "text"):
        if key not in obj:
            raise ValueError(f"missing field {key!r}")
    tweet_id = obj["id"]
    author = obj["author"]
    text = obj["text"]
    if not isinstance(tweet_id, str) or not tweet_id:
        raise ValueError("id must be a non-empty string")
    if not isinstance(author, str) or not author:
        raise ValueError("author must be a non-empty string")
    if not isinstance(text, str):
        raise ValueError("text must be a string")
    created_at = parse_timestamp(str(obj["created_at"]))
    retweeted = obj.get("retweeted_author")
    if retweeted is not None:
        if not isinstance(retweeted, str):
            raise ValueError("retweeted_author must be a string")
        retweeted = retweeted or None  # empty string means absent
    return RawTweet(
        id=tweet_id,
        author=author,
        created_at=created_at,
        text=text,
        retweeted_author=retweeted,
    )


def ingest_jsonl(path, keywords=None) -> tuple[list[RawTweet], IngestStats]:
    """Read tweets from a JSONL file.

    keywords, when given, keeps only tweets whose text contains at least one
    of them (case-insensitive) -- the file-based stand-in for collection-time
    keyword tracking. Filtered-out records do not appear in any counter.
    Duplicate ids count as malformed so downstream corpora stay keyed by id.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"cannot read tweet file: {path}")
    lowered = [k.lower() for k in keywords] if keywords else None

    tweets: list[RawTweet] = []
    stats = IngestStats()
    seen_ids: set[str] = set()
    users: set[str] = set()
    with path.open("r", encoding="utf-8") as handle:
        for line in handle:
            if not line.strip():
                continue
            try:
                tweet = _parse_record(json.loads(line))
                if tweet.id in seen_ids:
                    raise ValueError(f"duplicate id {tweet.id!r}")
            except (json.JSONDecodeError, ValueError, TypeError):
                stats.malformed_skipped += 1
                continue
            if lowered is not None:
                text = tweet.text.lower()
                if not any(k in text for k in lowered):
                    continue
            seen_ids.add(tweet.id)
            tweets.append(tweet)
            stats.total += 1
            if tweet.is_retweet:
                stats.retweets += 1
            else:
                stats.originals += 1
            users.add(tweet.author)
            if tweet.retweeted_author:
                users.add(tweet.retweeted_author)
    stats.distinct_users = len(users)
    return tweets, stats
