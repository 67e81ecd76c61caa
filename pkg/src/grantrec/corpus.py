"""Document acquisition, cleaning, and sentence segmentation.

Builds the immutable corpus that both score channels read: tag-stripped
text, sentence lists, per-document term counts, and the inverted
term-to-documents index.
"""

from __future__ import annotations

import re
import unicodedata
import urllib.error
import urllib.parse
import urllib.request
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import (
    DocumentNotFoundError,
    DuplicateDocumentError,
    FetchError,
    UnsupportedContentError,
)
from .tokenizer import TokenizerProfile, tokenize

# The quoted alternates let attribute values carry '>' without closing the
# tag; markup that never closes is left in place as literal text.
TAG_RE = re.compile(r"""<("[^"]*"|'[^']*'|[^'">])*>""")

SENTENCE_DELIMITERS = "。．.!！?？\n"
_SENTENCE_SPLIT_RE = re.compile("[%s]" % re.escape(SENTENCE_DELIMITERS))
_WS_RE = re.compile(r"\s+")


class DocKind(str, Enum):
    HTML = "html"
    TEXT = "text"


class OwnerRole(str, Enum):
    GRANT = "grant"
    RESEARCHER = "researcher"
    HISTORICAL = "historical"


@dataclass(frozen=True)
class DocOwner:
    role: OwnerRole
    ref: str


@dataclass(frozen=True)
class RawDocument:
    id: str
    origin: str
    kind: DocKind
    body: str
    owner: DocOwner


@dataclass(frozen=True)
class CleanDocument:
    id: str
    text: str
    sentences: tuple[str, ...]
    owner: DocOwner


def collapse_whitespace(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def strip_html(body: str) -> str:
    """Remove markup and collapse whitespace runs to single spaces."""
    return collapse_whitespace(TAG_RE.sub("", body))


def segment_sentences(text: str) -> list[str]:
    """Split on sentence delimiters; pieces are trimmed and never empty."""
    pieces = (collapse_whitespace(p) for p in _SENTENCE_SPLIT_RE.split(text))
    return [p for p in pieces if p]


@dataclass(frozen=True)
class Corpus:
    """Immutable after ingestion; safe to share across scoring tasks."""

    documents: Mapping[str, CleanDocument]
    term_counts: Mapping[str, Mapping[str, int]]
    term_document_index: Mapping[str, frozenset[str]]

    @property
    def document_count(self) -> int:
        return len(self.documents)

    def document(self, doc_id: str) -> CleanDocument:
        try:
            return self.documents[doc_id]
        except KeyError:
            raise DocumentNotFoundError(f"unknown document id: {doc_id}") from None

    def owned_by(self, role: OwnerRole, ref: str | None = None) -> list[CleanDocument]:
        """Documents with the given owner role (and ref, when given), id-sorted."""
        return [
            doc
            for _, doc in sorted(self.documents.items())
            if doc.owner.role is role and (ref is None or doc.owner.ref == ref)
        ]


def clean_document(raw: RawDocument) -> CleanDocument:
    body = unicodedata.normalize("NFC", raw.body)
    if raw.kind is DocKind.HTML:
        text = strip_html(body)
        sentences = segment_sentences(text)
    else:
        # segment before collapsing so newlines still delimit sentences
        sentences = segment_sentences(body)
        text = collapse_whitespace(body)
    return CleanDocument(raw.id, text, tuple(sentences), raw.owner)


def ingest_corpus(sources: Iterable[RawDocument], profile: TokenizerProfile) -> Corpus:
    """Clean and index every source document.

    Raises DuplicateDocumentError when two sources share an id.
    """
    documents: dict[str, CleanDocument] = {}
    term_counts: dict[str, Mapping[str, int]] = {}
    index: dict[str, set[str]] = {}
    for raw in sorted(sources, key=lambda r: r.id):
        if raw.id in documents:
            raise DuplicateDocumentError(f"duplicate document id: {raw.id}")
        doc = clean_document(raw)
        counts = Counter(tokenize(profile, doc.text))
        documents[doc.id] = doc
        term_counts[doc.id] = dict(counts)
        for term in counts:
            index.setdefault(term, set()).add(doc.id)
    return Corpus(
        documents,
        term_counts,
        {term: frozenset(ids) for term, ids in index.items()},
    )


def fetch_remote(
    uri: str,
    owner: DocOwner | None = None,
    *,
    doc_id: str | None = None,
    timeout: float = 10.0,
) -> RawDocument:
    """Download one document over http(s). Optional plumbing; file-based
    ingestion is the supported path."""
    parsed = urllib.parse.urlparse(uri)
    if parsed.scheme not in ("http", "https"):
        raise FetchError(uri, f"unsupported scheme: {parsed.scheme!r}")
    request = urllib.request.Request(uri, headers={"User-Agent": "grantrec/0.1"})
    try:
        with urllib.request.urlopen(request, timeout=timeout) as response:
            content_type = response.headers.get_content_type()
            charset = response.headers.get_content_charset() or "utf-8"
            payload = response.read()
    except urllib.error.HTTPError as exc:
        raise FetchError(uri, f"status {exc.code}", status=exc.code) from exc
    except urllib.error.URLError as exc:
        raise FetchError(uri, f"unreachable: {exc.reason}") from exc

    if content_type == "text/html":
        kind = DocKind.HTML
    elif content_type.startswith("text/") or content_type == "application/json":
        kind = DocKind.TEXT
    else:
        raise UnsupportedContentError(uri, f"non-text content type: {content_type}")
    try:
        body = payload.decode(charset)
    except (UnicodeDecodeError, LookupError) as exc:
        raise UnsupportedContentError(uri, f"undecodable payload: {exc}") from exc

    if owner is None:
        owner = DocOwner(OwnerRole.GRANT, parsed.netloc or "remote")
    return RawDocument(doc_id or uri, uri, kind, body, owner)
