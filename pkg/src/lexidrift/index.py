"""Inverted paragraph index with collection statistics and persistence.

Everything downstream (BM25, relevance models, reports) reads the corpus
through this structure, so construction canonicalises the order of all
containers: terms sorted lexicographically, posting lists sorted by doc_id,
document tables sorted by doc_id.  Two builds over the same paragraphs are
therefore identical object-for-object, which is what makes whole experiment
runs reproducible byte-for-byte.

On disk an index is a small text container: a magic+version header line, a
sha256 checksum line, then one JSON payload line.  The stopword list used at
analysis time is stored inside the payload so a saved index is self-contained.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from pathlib import Path
from typing import NamedTuple, Sequence

FORMAT_MAGIC = "LEXIDRIFT-IDX"
FORMAT_VERSION = 1


class IndexFormatError(ValueError):
    """Raised when an index file is unreadable: bad magic, newer version,
    truncation or checksum mismatch."""


class Posting(NamedTuple):
    doc_id: str
    tf: int


class Index:
    """Immutable-by-convention inverted index over one collection."""

    def __init__(
        self,
        label: str,
        postings: dict[str, list[Posting]],
        num_novels: int,
        stopwords: frozenset[str] = frozenset(),
    ) -> None:
        self.label = label
        self.num_novels = num_novels
        self.stopwords = frozenset(stopwords)
        # Canonical order: sorted terms, doc_id-sorted posting lists.
        self.postings: dict[str, list[Posting]] = {
            term: sorted(postings[term]) for term in sorted(postings)
        }
        self.df: dict[str, int] = {}
        self.cf: dict[str, int] = {}
        doc_len_acc: dict[str, int] = {}
        for term, plist in self.postings.items():
            if not plist:
                raise ValueError(f"term {term!r} has an empty posting list")
            self.df[term] = len(plist)
            self.cf[term] = sum(p.tf for p in plist)
            for doc_id, tf in plist:
                if tf <= 0:
                    raise ValueError(f"non-positive tf for {term!r} in {doc_id}")
                doc_len_acc[doc_id] = doc_len_acc.get(doc_id, 0) + tf
        self.doc_lens: dict[str, int] = {
            d: doc_len_acc[d] for d in sorted(doc_len_acc)
        }
        # Forward index (doc -> term -> tf), term order canonical; RM
        # estimation walks documents term-by-term through this table.
        self.forward: dict[str, dict[str, int]] = {d: {} for d in self.doc_lens}
        for term, plist in self.postings.items():
            for doc_id, tf in plist:
                self.forward[doc_id][term] = tf
        self.num_docs = len(self.doc_lens)
        self.total_tokens = sum(self.cf.values())
        self.avg_doc_len = self.total_tokens / self.num_docs

    @property
    def vocabulary(self):
        return self.postings.keys()

    def __contains__(self, term: str) -> bool:
        return term in self.postings

    def __repr__(self) -> str:  # pragma: no cover
        return (
            f"Index({self.label!r}, docs={self.num_docs}, "
            f"terms={len(self.postings)}, tokens={self.total_tokens})"
        )


def build_index(
    paragraphs: Sequence,
    label: str,
    stopwords: frozenset[str] = frozenset(),
) -> Index:
    """Build an index from analysed paragraphs (anything with .doc_id,
    .novel_id and .tokens)."""
    if not paragraphs:
        raise ValueError(
            f"cannot build index {label!r} from zero paragraphs"
        )
    postings: dict[str, list[Posting]] = {}
    seen: set[str] = set()
    novels: set[str] = set()
    for para in paragraphs:
        if para.doc_id in seen:
            raise ValueError(f"duplicate doc_id {para.doc_id!r}")
        seen.add(para.doc_id)
        novels.add(para.novel_id)
        for term, tf in Counter(para.tokens).items():
            postings.setdefault(term, []).append(Posting(para.doc_id, tf))
    return Index(label, postings, num_novels=len(novels), stopwords=stopwords)


def save_index(index: Index, path: str | Path) -> None:
    payload = json.dumps(
        {
            "label": index.label,
            "num_novels": index.num_novels,
            "stopwords": sorted(index.stopwords),
            "postings": {
                term: [[p.doc_id, p.tf] for p in plist]
                for term, plist in index.postings.items()
            },
        },
        separators=(",", ":"),
    )
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    Path(path).write_text(
        f"{FORMAT_MAGIC} {FORMAT_VERSION}\n{digest}\n{payload}\n",
        encoding="utf-8",
    )


def load_index(path: str | Path) -> Index:
    raw = Path(path).read_text(encoding="utf-8")
    parts = raw.split("\n", 2)
    if len(parts) < 3:
        raise IndexFormatError(f"{path}: truncated index file")
    header, digest, payload = parts[0], parts[1], parts[2].rstrip("\n")
    fields = header.split()
    if len(fields) != 2 or fields[0] != FORMAT_MAGIC:
        raise IndexFormatError(f"{path}: not a {FORMAT_MAGIC} file")
    try:
        version = int(fields[1])
    except ValueError:
        raise IndexFormatError(f"{path}: malformed version {fields[1]!r}") from None
    if version > FORMAT_VERSION:
        raise IndexFormatError(
            f"{path}: format version {version} is newer than the supported "
            f"version {FORMAT_VERSION}"
        )
    actual = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    if actual != digest:
        raise IndexFormatError(
            f"{path}: checksum mismatch, file is truncated or corrupted"
        )
    obj = json.loads(payload)
    postings = {
        term: [Posting(doc_id, tf) for doc_id, tf in plist]
        for term, plist in obj["postings"].items()
    }
    return Index(
        label=obj["label"],
        postings=postings,
        num_novels=obj["num_novels"],
        stopwords=frozenset(obj["stopwords"]),
    )
