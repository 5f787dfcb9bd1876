"""BM25 ranking over an inverted index, for plain and weighted queries.

The initial query stage scores a bag of unit-weight terms; the feedback
stage reuses the same scorer with the expansion weights, i.e. a document's
score is the weight-weighted sum of its per-term BM25 scores.  Ties are
broken by ascending doc_id so rankings are total and reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from lexidrift.index import Index


@dataclass(frozen=True)
class BM25Params:
    k1: float = 1.2
    b: float = 0.75


@dataclass(frozen=True)
class WeightedQuery:
    """Term -> weight map; weights must be finite and non-negative, with at
    least one positive entry."""

    terms: dict[str, float]
    origin: str = "FULL"

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("query has no terms")
        positive = False
        for term, weight in self.terms.items():
            if not math.isfinite(weight) or weight < 0:
                raise ValueError(f"bad weight {weight!r} for term {term!r}")
            positive = positive or weight > 0
        if not positive:
            raise ValueError("query has no positive-weight term")

    @classmethod
    def uniform(cls, terms: list[str], origin: str = "FULL") -> "WeightedQuery":
        return cls(terms={t: 1.0 for t in terms}, origin=origin)


@dataclass
class RankedList:
    """Top-k documents, score-descending, doc_id-ascending on ties."""

    entries: list[tuple[str, float]]
    depth: int
    collection: str = "FULL"
    _ranks: dict[str, int] | None = field(default=None, repr=False, compare=False)

    def doc_ids(self) -> list[str]:
        return [doc_id for doc_id, _ in self.entries]

    def rank_of(self, doc_id: str) -> int | None:
        """1-based rank, or None if the document was not retrieved."""
        if self._ranks is None:
            self._ranks = {d: i for i, (d, _) in enumerate(self.entries, start=1)}
        return self._ranks.get(doc_id)

    def __len__(self) -> int:
        return len(self.entries)


def idf(index: Index, term: str) -> float:
    """ln(1 + (N - df + 0.5) / (df + 0.5)); non-negative for any df <= N."""
    df = index.df.get(term, 0)
    return math.log(1.0 + (index.num_docs - df + 0.5) / (df + 0.5))


def bm25_term_score(
    index: Index, term: str, doc_id: str, params: BM25Params = BM25Params()
) -> float:
    """BM25 contribution of one term to one document (0.0 if absent)."""
    if doc_id not in index.doc_lens:
        raise KeyError(f"unknown doc_id {doc_id!r} in index {index.label!r}")
    tf = index.forward[doc_id].get(term, 0)
    if tf == 0:
        return 0.0
    dl = index.doc_lens[doc_id]
    norm = tf + params.k1 * (1.0 - params.b + params.b * dl / index.avg_doc_len)
    return idf(index, term) * tf * (params.k1 + 1.0) / norm


def search(
    index: Index,
    query: WeightedQuery,
    k: int,
    params: BM25Params = BM25Params(),
) -> RankedList:
    """Score all matching documents, return the top k.

    Documents matching no query term are never returned, whatever k is.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    k1, b = params.k1, params.b
    avg = index.avg_doc_len
    doc_lens = index.doc_lens
    scores: dict[str, float] = {}
    for term, weight in query.terms.items():
        if weight == 0.0:
            continue
        plist = index.postings.get(term)
        if not plist:
            continue
        w_idf = weight * idf(index, term)
        for doc_id, tf in plist:
            dl = doc_lens[doc_id]
            part = w_idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * dl / avg))
            scores[doc_id] = scores.get(doc_id, 0.0) + part
    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    return RankedList(entries=ranked[:k], depth=k, collection=index.label)
