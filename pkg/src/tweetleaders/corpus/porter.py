"""Porter suffix-stripping stemmer for English (the classic 1980 algorithm).

Implemented directly from the published rule tables so the package has no
external NLP dependency. Within each step the rule with the longest matching
suffix is selected first and applied only if its condition holds; a failed
condition ends the step without falling through to shorter suffixes.
"""

from __future__ import annotations

_VOWELS = frozenset("aeiou")


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        # y is a vowel when preceded by a consonant ("syzygy"), otherwise a
        # consonant ("toy", or word-initial "yes").
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel-to-consonant transitions: stems match [C](VC)^m[V]."""
    m = 0
    for i in range(1, len(stem)):
        if _is_consonant(stem, i) and not _is_consonant(stem, i - 1):
            m += 1
    return m


def _contains_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    """consonant-vowel-consonant ending where the final consonant is not w, x, y."""
    if len(word) < 3:
        return False
    return (
        _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


def _longest_rule(word, rules):
    """Pick the rule whose suffix is the longest match against `word`."""
    best = None
    for suffix, repl, cond in rules:
        if word.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
            best = (suffix, repl, cond)
    return best


def _apply(word, rules):
    rule = _longest_rule(word, rules)
    if rule is None:
        return word
    suffix, repl, cond = rule
    stem = word[: len(word) - len(suffix)]
    if cond is not None and not cond(stem):
        return word
    return stem + repl


def _m_gt(threshold):
    return lambda stem: _measure(stem) > threshold


_STEP2 = [
    ("ational", "ate", _m_gt(0)),
    ("tional", "tion", _m_gt(0)),
    ("enci", "ence", _m_gt(0)),
    ("anci", "ance", _m_gt(0)),
    ("izer", "ize", _m_gt(0)),
    ("abli", "able", _m_gt(0)),
    ("alli", "al", _m_gt(0)),
    ("entli", "ent", _m_gt(0)),
    ("eli", "e", _m_gt(0)),
    ("ousli", "ous", _m_gt(0)),
    ("ization", "ize", _m_gt(0)),
    ("ation", "ate", _m_gt(0)),
    ("ator", "ate", _m_gt(0)),
    ("alism", "al", _m_gt(0)),
    ("iveness", "ive", _m_gt(0)),
    ("fulness", "ful", _m_gt(0)),
    ("ousness", "ous", _m_gt(0)),
    ("aliti", "al", _m_gt(0)),
    ("iviti", "ive", _m_gt(0)),
    ("biliti", "ble", _m_gt(0)),
]

_STEP3 = [
    ("icate", "ic", _m_gt(0)),
    ("ative", "", _m_gt(0)),
    ("alize", "al", _m_gt(0)),
    ("iciti", "ic", _m_gt(0)),
    ("ical", "ic", _m_gt(0)),
    ("ful", "", _m_gt(0)),
    ("ness", "", _m_gt(0)),
]

_STEP4 = [
    ("al", "", _m_gt(1)),
    ("ance", "", _m_gt(1)),
    ("ence", "", _m_gt(1)),
    ("er", "", _m_gt(1)),
    ("ic", "", _m_gt(1)),
    ("able", "", _m_gt(1)),
    ("ible", "", _m_gt(1)),
    ("ant", "", _m_gt(1)),
    ("ement", "", _m_gt(1)),
    ("ment", "", _m_gt(1)),
    ("ent", "", _m_gt(1)),
    ("ion", "", lambda stem: _measure(stem) > 1 and stem[-1:] in ("s", "t")),
    ("ou", "", _m_gt(1)),
    ("ism", "", _m_gt(1)),
    ("ate", "", _m_gt(1)),
    ("iti", "", _m_gt(1)),
    ("ous", "", _m_gt(1)),
    ("ive", "", _m_gt(1)),
    ("ize", "", _m_gt(1)),
]


def _step1a(word):
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _step1b(word):
    if word.endswith("eed"):
        if _measure(word[:-3]) > 0:
            return word[:-1]
        return word
    removed = None
    if word.endswith("ed") and _contains_vowel(word[:-2]):
        removed = word[:-2]
    elif word.endswith("ing") and _contains_vowel(word[:-3]):
        removed = word[:-3]
    if removed is None:
        return word
    if removed.endswith(("at", "bl", "iz")):
        return removed + "e"
    if _ends_double_consonant(removed) and removed[-1] not in "lsz":
        return removed[:-1]
    if _measure(removed) == 1 and _ends_cvc(removed):
        return removed + "e"
    return removed


def _step1c(word):
    # y -> i only when preceded by a consonant that is not the first letter
    # (the author's documented refinement: keeps "say"/"enjoy", still maps
    # "happy" -> "happi"). The 1980 condition (*v*) would give "sai".
    if (
        word.endswith("y")
        and len(word) > 2
        and _is_consonant(word, len(word) - 2)
    ):
        return word[:-1] + "i"
    return word


def _step5a(word):
    if word.endswith("e"):
        stem = word[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return word


def _step5b(word):
    if _measure(word) > 1 and _ends_double_consonant(word) and word.endswith("l"):
        return word[:-1]
    return word


def stem(word: str) -> str:
    """Stem a single lowercase word; words of length <= 2 pass through."""
    if len(word) <= 2:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _apply(word, _STEP2)
    word = _apply(word, _STEP3)
    word = _apply(word, _STEP4)
    word = _step5a(word)
    word = _step5b(word)
    return word
