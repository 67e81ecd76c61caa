"""Input-tree loading and corpus persistence.

Expected layout under the data root:

    grants/<grant-id>/surface/*.html|*.txt      public call documents
    grants/<grant-id>/historical/*.html|*.txt   past selection results / abstracts
    researchers/<id>/kaken.txt                  declared keywords, one per line
    researchers/<id>/papers/*.html|*.txt        the researcher's own papers
    researchers/<id>/kaken_abstracts/*.txt      optional past application abstracts
    researchers/<id>/name.txt                   optional display name

PDF sources must be converted to .txt beforehand (external preprocessing).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path

from .corpus import (
    CleanDocument,
    Corpus,
    DocKind,
    DocOwner,
    OwnerRole,
    RawDocument,
    ingest_corpus,
)
from .errors import DocumentDecodeError
from .jsonio import dump_json, load_json
from .recommend import Researcher
from .taxonomy import KeywordTable
from .tokenizer import (
    TokenizerProfile,
    default_stopwords,
    load_phrase_file,
    make_profile,
)

_SOURCE_SUFFIXES = {".html": DocKind.HTML, ".htm": DocKind.HTML, ".txt": DocKind.TEXT}


@dataclass
class Dataset:
    corpus: Corpus
    researchers: dict[str, Researcher]
    profile: TokenizerProfile

    def grant_ids(self) -> list[str]:
        return sorted(
            {
                doc.owner.ref
                for doc in self.corpus.documents.values()
                if doc.owner.role in (OwnerRole.GRANT, OwnerRole.HISTORICAL)
            }
        )


def build_profile(
    table: KeywordTable | None = None,
    stopwords_path: str | Path | None = None,
    lexicon_path: str | Path | None = None,
) -> TokenizerProfile:
    """Default profile, with table keywords folded into the noun lexicon so
    multiword keywords count as single terms."""
    stopwords = set(default_stopwords())
    if stopwords_path:
        stopwords.update(load_phrase_file(stopwords_path))
    lexicon: set[str] = set()
    if lexicon_path:
        lexicon.update(load_phrase_file(lexicon_path))
    if table is not None:
        lexicon.update(table.keywords())
    profile = make_profile("default", (), lexicon)
    # lexicon wins any collision; keywords must stay countable
    return make_profile("default", frozenset(stopwords) - profile.noun_lexicon, lexicon)


def _read_source(path: Path, doc_id: str, owner: DocOwner) -> RawDocument:
    kind = _SOURCE_SUFFIXES[path.suffix.lower()]
    try:
        body = path.read_text("utf-8")
    except UnicodeDecodeError as exc:
        raise DocumentDecodeError(f"{path} is not valid UTF-8: {exc}") from exc
    return RawDocument(doc_id, str(path), kind, body, owner)


def _source_files(directory: Path) -> list[Path]:
    if not directory.is_dir():
        return []
    return sorted(
        p for p in directory.iterdir()
        if p.is_file() and p.suffix.lower() in _SOURCE_SUFFIXES
    )


def load_root(
    root: str | Path,
    table: KeywordTable | None = None,
    stopwords_path: str | Path | None = None,
    lexicon_path: str | Path | None = None,
) -> Dataset:
    """Read the whole input tree and ingest it into a Dataset."""
    root = Path(root)
    profile = build_profile(table, stopwords_path, lexicon_path)

    sources: list[RawDocument] = []

    grants_dir = root / "grants"
    if grants_dir.is_dir():
        for grant_dir in sorted(p for p in grants_dir.iterdir() if p.is_dir()):
            grant_id = grant_dir.name
            for sub, role in (("surface", OwnerRole.GRANT), ("historical", OwnerRole.HISTORICAL)):
                for path in _source_files(grant_dir / sub):
                    doc_id = path.relative_to(root).as_posix()
                    sources.append(_read_source(path, doc_id, DocOwner(role, grant_id)))

    researchers: dict[str, Researcher] = {}
    researchers_dir = root / "researchers"
    if researchers_dir.is_dir():
        for r_dir in sorted(p for p in researchers_dir.iterdir() if p.is_dir()):
            r_id = r_dir.name
            owner = DocOwner(OwnerRole.RESEARCHER, r_id)
            paper_ids = []
            for path in _source_files(r_dir / "papers"):
                doc_id = path.relative_to(root).as_posix()
                sources.append(_read_source(path, doc_id, owner))
                paper_ids.append(doc_id)
            abstract_ids = []
            for path in _source_files(r_dir / "kaken_abstracts"):
                doc_id = path.relative_to(root).as_posix()
                sources.append(_read_source(path, doc_id, owner))
                abstract_ids.append(doc_id)

            keywords: set[str] = set()
            kaken_file = r_dir / "kaken.txt"
            if kaken_file.is_file():
                keywords = {
                    unicodedata.normalize("NFC", line)
                    for line in load_phrase_file(kaken_file)
                }
            name_file = r_dir / "name.txt"
            display_name = (
                name_file.read_text("utf-8").strip() if name_file.is_file() else r_id
            )
            researchers[r_id] = Researcher(
                r_id,
                display_name,
                frozenset(keywords),
                frozenset(paper_ids),
                frozenset(abstract_ids),
            )

    corpus = ingest_corpus(sources, profile)
    return Dataset(corpus, researchers, profile)


def dataset_to_dict(dataset: Dataset) -> dict:
    corpus = dataset.corpus
    return {
        "document_count": corpus.document_count,
        "documents": [
            {
                "id": doc.id,
                "text": doc.text,
                "sentences": list(doc.sentences),
                "owner": {"role": doc.owner.role.value, "ref": doc.owner.ref},
            }
            for _, doc in sorted(corpus.documents.items())
        ],
        "term_document_index": {
            term: sorted(ids) for term, ids in corpus.term_document_index.items()
        },
        "term_counts": {
            doc_id: dict(sorted(counts.items()))
            for doc_id, counts in sorted(corpus.term_counts.items())
        },
        "profile": {
            "name": dataset.profile.name,
            "stopwords": sorted(dataset.profile.stopwords),
            "noun_lexicon": sorted(dataset.profile.noun_lexicon),
        },
        "researchers": [
            {
                "id": r.id,
                "display_name": r.display_name,
                "kaken_keywords": sorted(r.kaken_keywords),
                "paper_document_ids": sorted(r.paper_document_ids),
                "past_kaken_document_ids": sorted(r.past_kaken_document_ids),
            }
            for _, r in sorted(dataset.researchers.items())
        ],
    }


def dataset_from_dict(data: dict) -> Dataset:
    documents = {}
    for d in data["documents"]:
        owner = DocOwner(OwnerRole(d["owner"]["role"]), d["owner"]["ref"])
        documents[d["id"]] = CleanDocument(
            d["id"], d["text"], tuple(d["sentences"]), owner
        )
    corpus = Corpus(
        documents,
        {doc_id: dict(counts) for doc_id, counts in data["term_counts"].items()},
        {term: frozenset(ids) for term, ids in data["term_document_index"].items()},
    )
    profile = TokenizerProfile(
        data["profile"]["name"],
        frozenset(data["profile"]["stopwords"]),
        frozenset(data["profile"]["noun_lexicon"]),
    )
    researchers = {
        r["id"]: Researcher(
            r["id"],
            r["display_name"],
            frozenset(r["kaken_keywords"]),
            frozenset(r["paper_document_ids"]),
            frozenset(r["past_kaken_document_ids"]),
        )
        for r in data["researchers"]
    }
    return Dataset(corpus, researchers, profile)


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    dump_json(dataset_to_dict(dataset), path)


def load_dataset(path: str | Path) -> Dataset:
    return dataset_from_dict(load_json(path))
