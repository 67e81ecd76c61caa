"""Deterministic noun-itemset extraction.

Stands in for a full morphological analyzer: whitespace/punctuation
splitting plus longest-match lookup of known noun phrases, with a stopword
filter. A real analyzer can be plugged in through ``TokenizerProfile.analyzer``
without touching any caller.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

_WORD_RE = re.compile(r"\w", re.UNICODE)


def canonical(text: str) -> str:
    """NFC-normalize, case-fold, and single-space a phrase or sentence."""
    return " ".join(unicodedata.normalize("NFC", text).casefold().split())


@dataclass(frozen=True)
class Token:
    """One analyzer unit; ``is_noun`` is meaningful only for plugged analyzers."""

    surface: str
    is_noun: bool = True


@dataclass(frozen=True)
class TokenizerProfile:
    name: str
    stopwords: frozenset[str] = frozenset()
    noun_lexicon: frozenset[str] = frozenset()
    analyzer: Callable[[str], list[Token]] | None = None

    def __post_init__(self):
        overlap = self.stopwords & self.noun_lexicon
        if overlap:
            raise ValueError(f"stopwords overlap the noun lexicon: {sorted(overlap)}")


def make_profile(
    name: str,
    stopwords: Iterable[str] = (),
    noun_lexicon: Iterable[str] = (),
    analyzer: Callable[[str], list[Token]] | None = None,
) -> TokenizerProfile:
    """Build a profile with canonicalized stopwords and lexicon phrases."""
    stops = frozenset(canonical(w) for w in stopwords) - {""}
    lexicon = frozenset(canonical(p) for p in noun_lexicon) - {""}
    return TokenizerProfile(name, stops, lexicon, analyzer)


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    raw = resources.files("grantrec").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(canonical(line) for line in raw.splitlines() if line.strip())


def default_profile(extra_lexicon: Iterable[str] = ()) -> TokenizerProfile:
    lexicon = frozenset(canonical(p) for p in extra_lexicon) - {""}
    return TokenizerProfile("default", default_stopwords() - lexicon, lexicon)


def load_phrase_file(path: str | Path) -> list[str]:
    """Read one phrase per line, skipping blanks."""
    text = Path(path).read_text("utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]


def _is_word(ch: str) -> bool:
    return bool(_WORD_RE.match(ch))


def _is_ascii_word(ch: str) -> bool:
    return ch.isascii() and _is_word(ch)


def _edge_blocked(inside: str, outside: str) -> bool:
    # only ASCII word characters demand a boundary; CJK phrases match mid-run
    return _is_ascii_word(inside) and _is_ascii_word(outside)


@lru_cache(maxsize=64)
def _phrases_longest_first(lexicon: frozenset[str]) -> tuple[str, ...]:
    return tuple(sorted(lexicon, key=lambda p: (-len(p), p)))


def _phrase_at(text: str, pos: int, phrases: tuple[str, ...]) -> str | None:
    for phrase in phrases:
        if not text.startswith(phrase, pos):
            continue
        if pos > 0 and _edge_blocked(phrase[0], text[pos - 1]):
            continue
        end = pos + len(phrase)
        if end < len(text) and _edge_blocked(phrase[-1], text[end]):
            continue
        return phrase
    return None


def phrase_occurs_in(phrase: str, text: str) -> bool:
    """True when the canonicalized phrase occurs in the text.

    Occurrences touching ASCII word characters on either side do not count,
    so ``machine learning`` is not found inside ``machine learnings``.
    """
    needle = canonical(phrase)
    if not needle:
        return False
    hay = canonical(text)
    start = hay.find(needle)
    while start != -1:
        if (start == 0 or not _edge_blocked(needle[0], hay[start - 1])) and (
            start + len(needle) == len(hay)
            or not _edge_blocked(needle[-1], hay[start + len(needle)])
        ):
            return True
        start = hay.find(needle, start + 1)
    return False


def tokenize(profile: TokenizerProfile, text: str) -> list[str]:
    """Ordered token occurrences: lexicon phrases first, then word runs.

    Stopwords are dropped; output is case-folded. Duplicates are preserved so
    callers can count term occurrences.
    """
    s = canonical(text)
    if profile.analyzer is not None:
        tokens = [canonical(t.surface) for t in profile.analyzer(s) if t.is_noun]
        return [t for t in tokens if t and t not in profile.stopwords]

    phrases = _phrases_longest_first(profile.noun_lexicon)
    out: list[str] = []
    i, n = 0, len(s)
    while i < n:
        if not _is_word(s[i]):
            i += 1
            continue
        phrase = _phrase_at(s, i, phrases)
        if phrase is not None:
            out.append(phrase)
            i += len(phrase)
            continue
        if _is_ascii_word(s[i]):
            j = i
            while j < n and _is_ascii_word(s[j]):
                j += 1
        else:
            # non-ASCII word run: stop at the next lexicon phrase so that
            # boundary-less scripts still pick up known phrases
            j = i + 1
            while (
                j < n
                and _is_word(s[j])
                and not _is_ascii_word(s[j])
                and _phrase_at(s, j, phrases) is None
            ):
                j += 1
        token = s[i:j]
        if token not in profile.stopwords:
            out.append(token)
        i = j
    return out


def extract_nouns(profile: TokenizerProfile, sentence: str) -> frozenset[str]:
    """Noun itemset of one sentence.

    Every lexicon phrase occurring in the sentence is included even when the
    greedy token scan consumed it inside a longer phrase.
    """
    s = canonical(sentence)
    items = set(tokenize(profile, s))
    for phrase in _phrases_longest_first(profile.noun_lexicon):
        if phrase not in items and phrase_occurs_in(phrase, s):
            items.add(phrase)
    return frozenset(items)
