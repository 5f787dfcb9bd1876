"""Pseudo-relevance feedback: relevance-model estimation and query expansion.

Given a keyword query, the top fb_docs BM25 results are treated as relevant
and a relevance model is estimated over their vocabulary:

    P(w|R) ~ sum over feedback docs d of  P_ml(w|d) * P(Q|d)

where P_ml is the maximum-likelihood term probability tf/|d| and P(Q|d) is
the query likelihood under Dirichlet smoothing with parameter mu.  The model
is truncated to the heaviest fb_terms terms and renormalised; optionally it
is first interpolated with a uniform model over the original query terms
(mixing weight lam on the original query).  The truncated, renormalised
distribution is the expanded query: simultaneously a weighted query for the
second retrieval stage and the term profile that the drift metrics compare.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from lexidrift.corpus import FULL_LABEL, PartitionedCorpus
from lexidrift.index import Index
from lexidrift.retrieval import BM25Params, WeightedQuery, search

logger = logging.getLogger(__name__)


class QueryTermNotInCollection(LookupError):
    """Raised when relevance estimation is asked for an out-of-vocabulary
    query term; callers that want the Absent marker use expand_query."""


@dataclass(frozen=True)
class ExpansionConfig:
    fb_docs: int = 100
    fb_terms: int = 100
    mu: float = 1000.0
    rm3_lambda: float = 0.0
    k1: float = 1.2
    b: float = 0.75

    def __post_init__(self) -> None:
        if self.fb_docs < 1:
            raise ValueError("fb_docs must be >= 1")
        if self.fb_terms < 1:
            raise ValueError("fb_terms must be >= 1")
        if self.mu <= 0:
            raise ValueError("mu must be positive")
        if not 0.0 <= self.rm3_lambda <= 1.0:
            raise ValueError("rm3_lambda must lie in [0, 1]")

    def bm25(self) -> BM25Params:
        return BM25Params(k1=self.k1, b=self.b)


@dataclass
class ExpandedQuery:
    """Expansion terms for one keyword in one collection.

    terms is weight-descending (term-ascending on ties) and sums to 1
    within 1e-9, unless absent is set, in which case it is empty: the
    keyword's stem does not occur in the collection at all.
    """

    keyword: str
    origin: str
    query_terms: tuple[str, ...]
    terms: list[tuple[str, float]] = field(default_factory=list)
    absent: bool = False

    def term_set(self) -> set[str]:
        return {t for t, _ in self.terms}

    def weights(self) -> dict[str, float]:
        return dict(self.terms)

    def top(self, n: int) -> list[tuple[str, float]]:
        return self.terms[:n]


def estimate_rm1(
    index: Index,
    query_terms: list[str],
    fb_docs: int,
    mu: float = 1000.0,
    params: BM25Params = BM25Params(),
) -> dict[str, float]:
    """Relevance model over the vocabulary of the top fb_docs BM25 results.

    Returns a normalised term distribution.  Raises
    QueryTermNotInCollection if any query term is out of vocabulary.
    """
    if not query_terms:
        raise ValueError("query_terms is empty")
    for q in query_terms:
        if q not in index.postings:
            raise QueryTermNotInCollection(
                f"term {q!r} not in collection {index.label!r}"
            )
    ranked = search(index, WeightedQuery.uniform(query_terms), k=fb_docs, params=params)
    if len(ranked) < fb_docs:
        logger.warning(
            "only %d of %d feedback documents available for %r in %s",
            len(ranked),
            fb_docs,
            query_terms,
            index.label,
        )
    total_tokens = index.total_tokens
    acc: dict[str, float] = {}
    for doc_id, _score in ranked.entries:
        doc_terms = index.forward[doc_id]
        dl = index.doc_lens[doc_id]
        # Dirichlet-smoothed query likelihood of this feedback document.
        likelihood = 1.0
        for q in query_terms:
            prior = index.cf[q] / total_tokens
            likelihood *= (doc_terms.get(q, 0) + mu * prior) / (dl + mu)
        for term, tf in doc_terms.items():
            acc[term] = acc.get(term, 0.0) + (tf / dl) * likelihood
    mass = math.fsum(acc.values())
    if mass <= 0.0:
        raise ValueError("relevance model collapsed to zero mass")
    scale = 1.0 / mass
    return {term: weight * scale for term, weight in acc.items()}


def truncate_renormalize(
    dist: dict[str, float], fb_terms: int
) -> list[tuple[str, float]]:
    """Keep the fb_terms heaviest terms and rescale weights to sum to 1.

    Ordering (and tie-breaking on term) is applied before truncation, so
    the cut is deterministic.
    """
    if fb_terms < 1:
        raise ValueError("fb_terms must be >= 1")
    ordered = sorted(dist.items(), key=lambda item: (-item[1], item[0]))
    kept = ordered[:fb_terms]
    mass = math.fsum(w for _, w in kept)
    if mass <= 0.0:
        raise ValueError("truncated distribution has zero mass")
    scale = 1.0 / mass
    return [(term, weight * scale) for term, weight in kept]


def interpolate_rm3(
    query_terms: list[str], rm1: dict[str, float], lam: float
) -> dict[str, float]:
    """Mix a uniform original-query model into the relevance model.

    lam is the weight on the original query; lam=0 returns rm1 unchanged
    and lam=1 returns the uniform query model.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lam must lie in [0, 1]")
    if lam == 0.0:
        return dict(rm1)
    unique = sorted(set(query_terms))
    if not unique:
        raise ValueError("query_terms is empty")
    p_orig = 1.0 / len(unique)
    if lam == 1.0:
        return {q: p_orig for q in unique}
    mixed = {term: (1.0 - lam) * weight for term, weight in rm1.items()}
    for q in unique:
        mixed[q] = mixed.get(q, 0.0) + lam * p_orig
    return mixed


def expand_query(
    corpus: PartitionedCorpus,
    collection: str,
    keyword: str,
    config: ExpansionConfig = ExpansionConfig(),
) -> ExpandedQuery:
    """Expand a keyword against one collection of the corpus.

    The keyword is run through the same analysis pipeline as the documents.
    If any resulting stem is out of vocabulary for the collection the result
    is an Absent marker, not an error: absence is a finding (the concept
    does not occur in that decade), and reports must show it as such.
    """
    index = corpus.index_for(collection)
    stems = tuple(_analyzed(keyword, corpus))
    if not stems:
        raise ValueError(f"keyword {keyword!r} has no indexable terms")
    if any(s not in index.postings for s in stems):
        return ExpandedQuery(
            keyword=keyword, origin=collection, query_terms=stems, absent=True
        )
    rm1 = estimate_rm1(
        index, list(stems), config.fb_docs, mu=config.mu, params=config.bm25()
    )
    dist = interpolate_rm3(list(stems), rm1, config.rm3_lambda)
    terms = truncate_renormalize(dist, config.fb_terms)
    return ExpandedQuery(
        keyword=keyword, origin=collection, query_terms=stems, terms=terms
    )


def _analyzed(keyword: str, corpus: PartitionedCorpus) -> list[str]:
    from lexidrift.textproc import analyze

    return analyze(keyword, corpus.stopwords)


def expansion_query(expansion: ExpandedQuery) -> WeightedQuery:
    """Turn an expansion into the weighted query for second-stage retrieval."""
    if expansion.absent:
        raise ValueError(
            f"keyword {expansion.keyword!r} is absent from {expansion.origin!r}"
        )
    return WeightedQuery(terms=dict(expansion.terms), origin=expansion.origin)


def full_collection_ranking(
    corpus: PartitionedCorpus,
    expansion: ExpandedQuery,
    depth: int,
    params: BM25Params = BM25Params(),
):
    """Run an expansion's weighted query against the FULL index.

    Every expansion, whatever collection it was estimated on, is retrieved
    against the same FULL index so rank correlations compare like with like.
    """
    return search(corpus.full, expansion_query(expansion), k=depth, params=params)
