"""Dictionary spell correction at edit distance one."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _edits1(token: str):
    """All strings at Damerau-free edit distance 1 (delete/transpose/replace/insert)."""
    splits = [(token[:i], token[i:]) for i in range(len(token) + 1)]
    deletes = (a + b[1:] for a, b in splits if b)
    transposes = (a + b[1] + b[0] + b[2:] for a, b in splits if len(b) > 1)
    replaces = (a + c + b[1:] for a, b in splits if b for c in _ALPHABET)
    inserts = (a + c + b for a, b in splits for c in _ALPHABET)
    out = set(deletes)
    out.update(transposes)
    out.update(replaces)
    out.update(inserts)
    out.discard(token)
    return out


class SpellCorrector:
    """Corrects a token to the unique lexicon word at edit distance <= 1.

    Known words pass through; when zero or several candidate words exist the
    token is returned unchanged (ties skip correction).
    """

    def __init__(self, words):
        self.words = frozenset(w.strip().lower() for w in words if w.strip())

    @classmethod
    @lru_cache(maxsize=1)
    def bundled(cls) -> "SpellCorrector":
        text = resources.files("tweetleaders.data").joinpath("words.txt").read_text()
        return cls(text.splitlines())

    def correct(self, token: str) -> str:
        if token in self.words:
            return token
        candidates = _edits1(token) & self.words
        if len(candidates) == 1:
            return next(iter(candidates))
        return token
