"""lexidrift: vocabulary drift around query concepts, measured by
pseudo-relevance feedback over decade-partitioned corpora."""

from lexidrift.corpus import (
    DECADE_LABELS,
    FULL_LABEL,
    ManifestRecord,
    Paragraph,
    PartitionedCorpus,
    assign_decade,
    build_corpus,
    load_corpus,
    save_corpus,
    segment_paragraphs,
)
from lexidrift.experiment import (
    ExperimentConfig,
    QueryEntry,
    ReportBundle,
    load_config,
    load_query_set,
    run_pipeline,
    write_reports,
)
from lexidrift.feedback import (
    ExpandedQuery,
    ExpansionConfig,
    estimate_rm1,
    expand_query,
    interpolate_rm3,
    truncate_renormalize,
)
from lexidrift.index import Index, Posting, build_index, load_index, save_index
from lexidrift.metrics import (
    ComparisonMatrix,
    MetricCell,
    aggregate,
    jaccard,
    js_divergence,
    kendall_tau,
)
from lexidrift.retrieval import (
    BM25Params,
    RankedList,
    WeightedQuery,
    bm25_term_score,
    idf,
    search,
)

__version__ = "0.1.0"

__all__ = [
    "DECADE_LABELS",
    "FULL_LABEL",
    "ManifestRecord",
    "Paragraph",
    "PartitionedCorpus",
    "assign_decade",
    "build_corpus",
    "load_corpus",
    "save_corpus",
    "segment_paragraphs",
    "ExperimentConfig",
    "QueryEntry",
    "ReportBundle",
    "load_config",
    "load_query_set",
    "run_pipeline",
    "write_reports",
    "ExpandedQuery",
    "ExpansionConfig",
    "estimate_rm1",
    "expand_query",
    "interpolate_rm3",
    "truncate_renormalize",
    "Index",
    "Posting",
    "build_index",
    "load_index",
    "save_index",
    "ComparisonMatrix",
    "MetricCell",
    "aggregate",
    "jaccard",
    "js_divergence",
    "kendall_tau",
    "BM25Params",
    "RankedList",
    "WeightedQuery",
    "bm25_term_score",
    "idf",
    "search",
    "__version__",
]
