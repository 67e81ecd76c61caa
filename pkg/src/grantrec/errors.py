"""Exception types shared across the package."""

from __future__ import annotations


class GrantRecError(Exception):
    """Base class for every error raised by this package."""


class DuplicateDocumentError(GrantRecError):
    """Two raw documents carry the same id."""


class DocumentDecodeError(GrantRecError):
    """A source file is not valid UTF-8."""


class DocumentNotFoundError(GrantRecError):
    """A document id is not present in the corpus."""


class UndefinedTermFrequencyError(GrantRecError):
    """Term frequency is undefined because the document has zero tokens."""


class EmptyGrantError(GrantRecError):
    """The grant has no surface documents to score against."""


class TableParseError(GrantRecError):
    """A keyword-table row is malformed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DuplicateKeywordError(GrantRecError):
    """The same (category, subcategory, field, keyword) tuple appears twice."""


class InvalidRuleError(GrantRecError):
    """Rule sides are empty or overlap."""


class UndefinedMetricError(GrantRecError):
    """A rule metric divides by a zero support count."""


class EmptyDatabaseError(GrantRecError):
    """The transaction database has no transactions."""


class InvalidWeightsError(GrantRecError):
    """Channel weights do not sum to one."""


class UnsupportedFormatError(GrantRecError):
    """Unknown report format name."""


class FetchError(GrantRecError):
    """A remote document could not be retrieved."""

    def __init__(self, uri: str, message: str, status: int | None = None):
        super().__init__(f"{uri}: {message}")
        self.uri = uri
        self.status = status


class UnsupportedContentError(FetchError):
    """The remote payload is not text."""
