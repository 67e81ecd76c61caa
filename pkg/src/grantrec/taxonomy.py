"""Hierarchical keyword table loading and in-text keyword matching."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .errors import DuplicateKeywordError, TableParseError
from .tokenizer import canonical


@dataclass(frozen=True)
class KeywordEntry:
    category: str
    subcategory: str
    field: str
    keyword: str


@dataclass(frozen=True)
class KeywordTable:
    entries: tuple[KeywordEntry, ...]

    @property
    def category_count(self) -> int:
        return len({e.category for e in self.entries})

    @property
    def subcategory_count(self) -> int:
        return len({e.subcategory for e in self.entries})

    @property
    def field_count(self) -> int:
        return len({e.field for e in self.entries})

    @property
    def keyword_count(self) -> int:
        return len(self.entries)

    @cached_property
    def _match_order(self) -> tuple[tuple[str, str], ...]:
        # (folded, original) pairs, longest first so multiword keywords are
        # reported ahead of keywords embedded in them
        pairs = {(canonical(e.keyword), e.keyword) for e in self.entries}
        return tuple(sorted(pairs, key=lambda p: (-len(p[0]), p[0])))

    def keywords(self) -> list[str]:
        return sorted({e.keyword for e in self.entries})


def load_keyword_table(path: str | Path) -> KeywordTable:
    """Parse a 4-column TSV (category, subcategory, field, keyword) with header."""
    try:
        text = Path(path).read_text("utf-8")
    except UnicodeDecodeError as exc:
        raise TableParseError(f"{path} is not valid UTF-8: {exc}") from exc
    lines = text.splitlines()
    if not lines:
        raise TableParseError("missing header row", line_number=1)

    entries: list[KeywordEntry] = []
    seen: set[tuple[str, str, str, str]] = set()
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        columns = [unicodedata.normalize("NFC", c.strip()) for c in line.split("\t")]
        if len(columns) != 4:
            raise TableParseError(
                f"expected 4 tab-separated columns, found {len(columns)}",
                line_number=number,
            )
        if any(not c for c in columns):
            raise TableParseError("empty column", line_number=number)
        key = tuple(columns)
        if key in seen:
            raise DuplicateKeywordError(f"line {number}: duplicate entry {key}")
        seen.add(key)
        entries.append(KeywordEntry(*columns))
    return KeywordTable(tuple(entries))


def match_keywords_in_text(table: KeywordTable, text: str) -> set[str]:
    """Table keywords occurring in the text, compared case-folded.

    Occurrence is plain substring containment, so a match never disappears
    when more text is appended.
    """
    hay = canonical(text)
    if not hay:
        return set()
    return {original for folded, original in table._match_order if folded in hay}
