"""Command-line entry points.

    lexidrift index build --manifest corpus/manifest.jsonl --out idx/
    lexidrift search --index idx/ --collection 1850s --query "the murder" --k 10
    lexidrift expand --index idx/ --collection 1850s --query murder
    lexidrift experiment run --config run.cfg --out reports/
    lexidrift serve --index-dir idx/ --port 8000
    lexidrift synth --out corpus/ --seed 7
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from lexidrift.corpus import build_corpus, load_corpus, save_corpus
from lexidrift.experiment import (
    ExperimentConfig,
    load_config,
    run_pipeline,
    write_reports,
)
from lexidrift.feedback import ExpansionConfig, expand_query
from lexidrift.retrieval import BM25Params, WeightedQuery, search
from lexidrift.textproc import analyze, load_stopwords


def _cmd_index_build(args: argparse.Namespace) -> int:
    stopwords = load_stopwords(args.stopwords) if args.stopwords else None
    corpus = build_corpus(args.manifest, stopwords)
    written = save_corpus(corpus, args.out)
    for label in corpus.labels:
        idx = corpus.indices[label]
        print(
            f"{label}\tdocs={idx.num_docs}\tnovels={idx.num_novels}"
            f"\tterms={len(idx.postings)}\ttokens={idx.total_tokens}"
        )
    print(f"wrote {len(written)} index files to {args.out}")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.index)
    index = corpus.index_for(args.collection)
    terms = analyze(args.query, corpus.stopwords)
    if not terms:
        print("query has no indexable terms", file=sys.stderr)
        return 2
    ranked = search(
        index,
        WeightedQuery.uniform(terms, origin=args.collection),
        k=args.k,
        params=BM25Params(k1=args.k1, b=args.b),
    )
    for rank, (doc_id, score) in enumerate(ranked.entries, start=1):
        print(f"{rank}\t{doc_id}\t{score:.6f}")
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.index)
    config = ExpansionConfig(
        fb_docs=args.fb_docs,
        fb_terms=args.fb_terms,
        mu=args.mu,
        rm3_lambda=args.rm3_lambda,
    )
    expansion = expand_query(corpus, args.collection, args.query, config)
    if expansion.absent:
        print(f"absent\t{args.query}\t{args.collection}")
        return 0
    for term, weight in expansion.top(args.top):
        print(f"{term}\t{weight:.6f}")
    return 0


def _cmd_experiment_run(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    bundle = run_pipeline(config)
    written = write_reports(bundle, args.out)
    for path in written:
        print(path)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from lexidrift.service import ServiceState, serve

    config = load_config(args.config) if args.config else ExperimentConfig()
    index_dir = args.index_dir or config.index_dir
    if not index_dir:
        print("serve needs --index-dir or a config naming one", file=sys.stderr)
        return 2
    state = ServiceState(corpus=load_corpus(index_dir), config=config)
    serve(state, host=args.host, port=args.port)
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    from lexidrift.synthesis import generate_manifest

    manifest = generate_manifest(
        args.out,
        seed=args.seed,
        novels_per_decade=args.novels_per_decade,
        paragraphs_per_novel=args.paragraphs_per_novel,
    )
    print(manifest)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexidrift",
        description="Vocabulary drift across decade-partitioned corpora",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="index management")
    index_sub = p_index.add_subparsers(dest="index_command", required=True)
    p_build = index_sub.add_parser("build", help="build partition indices")
    p_build.add_argument("--manifest", required=True)
    p_build.add_argument("--out", required=True)
    p_build.add_argument("--stopwords", default=None)
    p_build.set_defaults(func=_cmd_index_build)

    p_search = sub.add_parser("search", help="BM25 search one collection")
    p_search.add_argument("--index", required=True)
    p_search.add_argument("--collection", default="FULL")
    p_search.add_argument("--query", required=True)
    p_search.add_argument("--k", type=int, default=10)
    p_search.add_argument("--k1", type=float, default=1.2)
    p_search.add_argument("--b", type=float, default=0.75)
    p_search.set_defaults(func=_cmd_search)

    p_expand = sub.add_parser("expand", help="relevance-feedback expansion")
    p_expand.add_argument("--index", required=True)
    p_expand.add_argument("--collection", default="FULL")
    p_expand.add_argument("--query", required=True)
    p_expand.add_argument("--fb-docs", type=int, default=100, dest="fb_docs")
    p_expand.add_argument("--fb-terms", type=int, default=100, dest="fb_terms")
    p_expand.add_argument("--top", type=int, default=15)
    p_expand.add_argument("--mu", type=float, default=1000.0)
    p_expand.add_argument(
        "--lambda", type=float, default=0.0, dest="rm3_lambda"
    )
    p_expand.set_defaults(func=_cmd_expand)

    p_exp = sub.add_parser("experiment", help="experiment protocol")
    exp_sub = p_exp.add_subparsers(dest="experiment_command", required=True)
    p_run = exp_sub.add_parser("run", help="run the protocol, write reports")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--out", required=True)
    p_run.set_defaults(func=_cmd_experiment_run)

    p_serve = sub.add_parser("serve", help="start the JSON API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--index-dir", default=None, dest="index_dir")
    p_serve.add_argument("--config", default=None)
    p_serve.set_defaults(func=_cmd_serve)

    p_synth = sub.add_parser("synth", help="generate a synthetic corpus")
    p_synth.add_argument("--out", required=True)
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument(
        "--novels-per-decade", type=int, default=4, dest="novels_per_decade"
    )
    p_synth.add_argument(
        "--paragraphs-per-novel",
        type=int,
        default=50,
        dest="paragraphs_per_novel",
    )
    p_synth.set_defaults(func=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=logging.INFO, format="%(levelname)s %(name)s: %(message)s"
    )
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
