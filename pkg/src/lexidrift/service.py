"""Read-only JSON API over a built corpus.

The service is a thin view: every number it returns is produced by the same
library calls a script would make, with no recomputation shortcuts, so
responses agree bit-for-bit with offline runs.  Matrix responses require a
full experiment pass, which is computed lazily and cached per configuration
fingerprint; concurrent readers of an already-cached matrix never block.

Error responses all share one JSON shape: {"code": ..., "message": ...}.
"""

from __future__ import annotations

import hashlib
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from lexidrift.corpus import FULL_LABEL, PartitionedCorpus, UnknownCollectionError
from lexidrift.experiment import (
    ExperimentConfig,
    QueryEntry,
    ReportBundle,
    default_query_set,
    run_pipeline,
)
from lexidrift.feedback import ExpandedQuery, expand_query, full_collection_ranking
from lexidrift.metrics import jaccard, js_divergence, kendall_tau

DEFAULT_TOP = 15


@dataclass
class ServiceState:
    """Corpus plus experiment configuration behind the endpoints."""

    corpus: PartitionedCorpus | None = None
    config: ExperimentConfig = field(default_factory=ExperimentConfig)
    queries: list[QueryEntry] = field(default_factory=default_query_set)
    _bundles: dict[str, ReportBundle] = field(default_factory=dict)
    _bundle_locks: dict[str, threading.Lock] = field(default_factory=dict)
    _guard: threading.Lock = field(default_factory=threading.Lock)

    def fingerprint(self) -> str:
        cfg = self.config
        blob = "|".join(
            str(v)
            for v in (
                cfg.fb_docs,
                cfg.fb_terms,
                cfg.rm3_lambda,
                cfg.mu,
                cfg.k1,
                cfg.b,
                cfg.depth,
                cfg.top_n,
                cfg.js_base,
                ",".join(q.keyword for q in self.queries),
            )
        )
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()

    def bundle(self) -> ReportBundle:
        """The experiment results for the current configuration, cached.

        Each fingerprint has its own lock, so a reader asking for an
        already-computed bundle proceeds immediately even while a
        different configuration is being computed.
        """
        key = self.fingerprint()
        cached = self._bundles.get(key)
        if cached is not None:
            return cached
        with self._guard:
            lock = self._bundle_locks.setdefault(key, threading.Lock())
        with lock:
            cached = self._bundles.get(key)
            if cached is None:
                cached = run_pipeline(self.config, self.corpus, self.queries)
                self._bundles[key] = cached
        return cached


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"code": code, "message": message}
    )


def _expansion_payload(exp: ExpandedQuery, top: int) -> dict:
    if exp.absent:
        return {
            "q": exp.keyword,
            "collection": exp.origin,
            "absent": True,
            "terms": [],
        }
    return {
        "q": exp.keyword,
        "collection": exp.origin,
        "absent": False,
        "terms": [{"term": t, "weight": w} for t, w in exp.top(top)],
    }


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="lexidrift", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def not_ready() -> JSONResponse:
        return _error(503, "not_ready", "no corpus is loaded yet")

    @app.get("/api/collections")
    def collections():
        if state.corpus is None:
            return not_ready()
        out = []
        for label in state.corpus.labels:
            idx = state.corpus.indices[label]
            out.append(
                {
                    "label": label,
                    "num_docs": idx.num_docs,
                    "num_novels": idx.num_novels,
                    "total_tokens": idx.total_tokens,
                    "vocabulary_size": len(idx.postings),
                    "avg_doc_len": idx.avg_doc_len,
                }
            )
        return {"collections": out}

    @app.get("/api/expand")
    def expand(
        q: str = Query(default=""),
        collection: str = Query(default=FULL_LABEL),
        top: int = Query(default=DEFAULT_TOP),
    ):
        if state.corpus is None:
            return not_ready()
        if not q.strip():
            return _error(400, "bad_request", "missing query parameter 'q'")
        if top < 1:
            return _error(400, "bad_request", "'top' must be >= 1")
        try:
            exp = expand_query(
                state.corpus, collection, q, state.config.expansion()
            )
        except UnknownCollectionError:
            return _error(
                404, "unknown_collection", f"no collection {collection!r}"
            )
        except ValueError as exc:
            return _error(400, "bad_request", str(exc))
        return _expansion_payload(exp, top)

    @app.get("/api/compare")
    def compare(
        q: str = Query(default=""),
        a: str = Query(default=""),
        b: str = Query(default=""),
    ):
        if state.corpus is None:
            return not_ready()
        if not q.strip() or not a or not b:
            return _error(
                400, "bad_request", "parameters 'q', 'a' and 'b' are required"
            )
        expansions = {}
        for label in (a, b):
            try:
                expansions[label] = expand_query(
                    state.corpus, label, q, state.config.expansion()
                )
            except UnknownCollectionError:
                return _error(
                    404, "unknown_collection", f"no collection {label!r}"
                )
            except ValueError as exc:
                return _error(400, "bad_request", str(exc))
        exp_a, exp_b = expansions[a], expansions[b]
        payload = {
            "q": q,
            "a": a,
            "b": b,
            "a_absent": exp_a.absent,
            "b_absent": exp_b.absent,
        }
        if exp_a.absent or exp_b.absent:
            return payload
        set_a, set_b = exp_a.term_set(), exp_b.term_set()
        ranking_a = full_collection_ranking(
            state.corpus, exp_a, depth=state.config.depth, params=state.config.bm25()
        )
        ranking_b = full_collection_ranking(
            state.corpus, exp_b, depth=state.config.depth, params=state.config.bm25()
        )
        payload.update(
            {
                "jaccard": jaccard(set_a, set_b),
                "jsd": js_divergence(
                    exp_a.weights(), exp_b.weights(), base=state.config.js_base
                ),
                "tau": kendall_tau(ranking_a, ranking_b),
                "overlap_terms": sorted(set_a & set_b),
                "a_only": sorted(set_a - set_b),
                "b_only": sorted(set_b - set_a),
            }
        )
        return payload

    @app.get("/api/matrix")
    def matrix(metric: str = Query(default="jaccard")):
        if state.corpus is None:
            return not_ready()
        if metric not in ("jaccard", "jsd", "tau"):
            return _error(
                400, "bad_request", f"unknown metric {metric!r}"
            )
        bundle = state.bundle()
        if metric == "tau":
            return {
                "metric": "tau",
                "queries": [entry.keyword for entry in bundle.queries],
                "decades": bundle.decades,
                "cells": [
                    [
                        bundle.tau[(entry.keyword, decade)]
                        for decade in bundle.decades
                    ]
                    for entry in bundle.queries
                ],
            }
        mat = bundle.matrices[metric]
        return {
            "metric": metric,
            "labels": mat.labels,
            "cells": [
                [
                    None
                    if mat.cell(row, col) is None
                    else {
                        "mean": mat.cell(row, col).mean,
                        "std": mat.cell(row, col).std,
                        "n": mat.cell(row, col).n,
                    }
                    for col in mat.labels
                ]
                for row in mat.labels
            ],
        }

    return app


def serve(
    state: ServiceState, host: str = "127.0.0.1", port: int = 8000
) -> None:  # pragma: no cover - exercised manually via the CLI
    import uvicorn

    uvicorn.run(create_app(state), host=host, port=port, log_level="info")
