"""Tweet text normalization and token reduction.

The normalization rules run in a fixed order (URL stripping first, so the
mention/hashtag patterns never chew on URL fragments):

    URL -> lowercase -> emoji -> mention/hashtag -> slang -> digits/punctuation

followed by whitespace collapsing. Token reduction then removes stopwords,
optionally spell-corrects, optionally stems, and drops short tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from sklearn.base import BaseEstimator, TransformerMixin

from . import porter
from .records import CleanTweet, RawTweet
from .spelling import SpellCorrector

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"#\w+")
# Pictographs, symbols, variation selectors and ZWJ sequences.
_EMOJI_RE = re.compile(
    "["
    "\U0001f000-\U0001ffff"
    "☀-➿"
    "⬀-⯿"
    "︀-️"
    "‍"
    "]+"
)
_DIGIT_RE = re.compile(r"\d+")
_NON_ALPHA_RE = re.compile(r"[^a-z\s]")


@lru_cache(maxsize=1)
def bundled_stopwords() -> frozenset[str]:
    text = resources.files("tweetleaders.data").joinpath("stopwords.txt").read_text()
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


@lru_cache(maxsize=1)
def bundled_slang() -> dict[str, str]:
    text = resources.files("tweetleaders.data").joinpath("slang.tsv").read_text()
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, repl = line.partition("\t")
        out[key.strip()] = repl.strip()
    return out


@dataclass
class PreprocessConfig:
    """Knobs for the normalization/tokenization pipeline.

    slang_map keys must be lowercase single tokens; they are matched on word
    boundaries before punctuation stripping, so "b4!" still expands.
    """

    stopwords: frozenset[str] = field(default_factory=bundled_stopwords)
    slang_map: dict[str, str] = field(default_factory=bundled_slang)
    spell_correction: bool = False
    stemming: bool = True
    min_token_length: int = 2

    def __post_init__(self):
        if self.min_token_length < 1:
            raise ValueError("min_token_length must be >= 1")
        for key in self.slang_map:
            if key != key.lower() or len(key.split()) != 1:
                raise ValueError(f"slang key {key!r} must be a lowercase single token")

    @property
    def slang_pattern(self) -> re.Pattern | None:
        if not self.slang_map:
            return None
        keys = sorted(self.slang_map, key=len, reverse=True)
        # Letter lookarounds rather than \b: keys carrying digits ("b4")
        # must match while "u" inside "up" must not, and a key next to a
        # digit ("u1") must be seen on the first pass, before digits go.
        body = "|".join(re.escape(k) for k in keys)
        return re.compile(r"(?<![a-z])(?:" + body + r")(?![a-z])")


def normalize_text(text: str, config: PreprocessConfig) -> str:
    text = _URL_RE.sub(" ", text)
    text = text.lower()
    text = _EMOJI_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    text = _HASHTAG_RE.sub(" ", text)
    pattern = config.slang_pattern
    if pattern is not None:
        text = pattern.sub(lambda m: config.slang_map[m.group(0)], text)
    # Digits become spaces so stripping never welds two letter runs into a
    # new token ("lo1l" must not turn into "lol").
    text = _DIGIT_RE.sub(" ", text)
    text = _NON_ALPHA_RE.sub(" ", text)
    return " ".join(text.split())


def _base_tokens(text: str, config: PreprocessConfig) -> list[str]:
    """Whitespace tokens minus stopwords, spell-corrected when enabled."""
    tokens = [t for t in text.split() if t not in config.stopwords]
    if config.spell_correction:
        corrector = SpellCorrector.bundled()
        tokens = [corrector.correct(t) for t in tokens]
    return tokens


def tokenize_and_reduce(text: str, config: PreprocessConfig) -> list[str]:
    """Reduce normalized text to the final token list (stemmed per config)."""
    tokens = _base_tokens(text, config)
    if config.stemming:
        tokens = [porter.stem(t) for t in tokens]
    return [t for t in tokens if len(t) >= config.min_token_length]


def preprocess_tweet(tweet: RawTweet, config: PreprocessConfig) -> CleanTweet | None:
    """Clean one tweet; None when no stemmed token survives."""
    normalized = normalize_text(tweet.text, config)
    base = _base_tokens(normalized, config)
    stemmed = [porter.stem(t) for t in base] if config.stemming else list(base)
    stemmed = [t for t in stemmed if len(t) >= config.min_token_length]
    if not stemmed:
        return None
    unstemmed = [t for t in base if len(t) >= config.min_token_length]
    return CleanTweet(
        id=tweet.id,
        author=tweet.author,
        created_at=tweet.created_at,
        tokens=tuple(stemmed),
        unstemmed_tokens=tuple(unstemmed),
    )


def preprocess_corpus(tweets, config: PreprocessConfig) -> list[CleanTweet]:
    """Clean a corpus, dropping tweets that reduce to zero tokens.

    The drop count is len(input) - len(output); blank tweets never reach
    downstream stages.
    """
    out = []
    for tweet in tweets:
        clean = preprocess_tweet(tweet, config)
        if clean is not None:
            out.append(clean)
    return out


class TweetPreprocessor(BaseEstimator, TransformerMixin):
    """Stateless transformer from raw texts to stemmed token lists.

    Exists so the text pipeline drops into estimator compositions; fit is a
    no-op and transform maps each text to its reduced token list.
    """

    def __init__(self, spell_correction=False, stemming=True, min_token_length=2):
        self.spell_correction = spell_correction
        self.stemming = stemming
        self.min_token_length = min_token_length

    def _config(self) -> PreprocessConfig:
        return PreprocessConfig(
            spell_correction=self.spell_correction,
            stemming=self.stemming,
            min_token_length=self.min_token_length,
        )

    def fit(self, X, y=None):
        return self

    def transform(self, X):
        config = self._config()
        return [tokenize_and_reduce(normalize_text(text, config), config) for text in X]
