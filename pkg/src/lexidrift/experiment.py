"""Experiment protocol: expand every query in every collection, retrieve on
the FULL index, score drift metrics, render reports.

For each keyword the expansion estimated on the FULL collection is the
reference; the expansion estimated on each decade is compared against it
(and against every other decade) three ways:

* Kendall tau-b between the rankings the FULL-estimated and the
  decade-estimated expansions induce on the FULL index,
* Jaccard overlap of the expansion term sets,
* Jensen-Shannon divergence of the expansion weight distributions.

Keywords whose stem never occurs in a collection are Absent there: they are
excluded from that collection's aggregates and rendered as explicit absent
markers, never as zeros.

All outputs are plain text with canonical ordering and fixed number
formatting, so re-running an experiment over the same corpus and
configuration reproduces every report file byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from lexidrift.corpus import (
    FULL_LABEL,
    PartitionedCorpus,
    build_corpus,
    load_corpus,
)
from lexidrift.feedback import (
    ExpandedQuery,
    ExpansionConfig,
    expand_query,
    full_collection_ranking,
)
from lexidrift.metrics import (
    ComparisonMatrix,
    MetricCell,
    aggregate,
    jaccard,
    js_divergence,
    kendall_tau,
)
from lexidrift.retrieval import BM25Params
from lexidrift.textproc import load_stopwords

CATEGORIES = ("thematic", "plot", "genre")

ABSENT_MARKER = "absent"


class ConfigError(ValueError):
    """Raised for unreadable experiment configuration files."""


@dataclass(frozen=True)
class QueryEntry:
    keyword: str
    category: str


def load_query_set(path: str | Path) -> list[QueryEntry]:
    """Read "keyword<TAB>category" lines; # comments and blanks ignored."""
    entries: list[QueryEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ConfigError(
                f"{path}: line {lineno}: expected 'keyword<TAB>category'"
            )
        keyword, category = parts[0].strip(), parts[1].strip()
        if category not in CATEGORIES:
            raise ConfigError(
                f"{path}: line {lineno}: unknown category {category!r}"
            )
        if keyword in seen:
            raise ConfigError(f"{path}: line {lineno}: duplicate keyword {keyword!r}")
        seen.add(keyword)
        entries.append(QueryEntry(keyword, category))
    if not entries:
        raise ConfigError(f"{path}: query set is empty")
    return entries


def default_query_set() -> list[QueryEntry]:
    ref = resources.files("lexidrift.data").joinpath("queries.txt")
    with resources.as_file(ref) as path:
        return load_query_set(path)


@dataclass(frozen=True)
class ExperimentConfig:
    fb_docs: int = 100
    fb_terms: int = 100
    rm3_lambda: float = 0.0
    mu: float = 1000.0
    k1: float = 1.2
    b: float = 0.75
    depth: int = 1000
    top_n: int = 15
    js_base: float = 2.0
    manifest: str | None = None
    index_dir: str | None = None
    queries: str | None = None
    stopwords: str | None = None

    def expansion(self) -> ExpansionConfig:
        return ExpansionConfig(
            fb_docs=self.fb_docs,
            fb_terms=self.fb_terms,
            mu=self.mu,
            rm3_lambda=self.rm3_lambda,
            k1=self.k1,
            b=self.b,
        )

    def bm25(self) -> BM25Params:
        return BM25Params(k1=self.k1, b=self.b)


_INT_KEYS = {"fb_docs", "fb_terms", "depth", "top_n"}
_FLOAT_KEYS = {"mu", "k1", "b", "js_base"}
_PATH_KEYS = {"manifest", "index_dir", "queries", "stopwords"}


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse a "key = value" configuration file.

    Recognised keys: fb_docs, fb_terms, lambda, mu, k1, b, depth, top_n,
    js_base and the paths manifest, index_dir, queries, stopwords.  Lines
    starting with # and blank lines are ignored; unknown keys are errors.
    Relative paths are resolved against the config file's directory.
    """
    path = Path(path)
    config = ExperimentConfig()
    for lineno, raw in enumerate(
        path.read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}: line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        try:
            if key in _INT_KEYS:
                config = replace(config, **{key: int(value)})
            elif key in _FLOAT_KEYS:
                config = replace(config, **{key: float(value)})
            elif key in ("lambda", "rm3_lambda"):
                config = replace(config, rm3_lambda=float(value))
            elif key in _PATH_KEYS:
                resolved = str((path.parent / value).resolve())
                config = replace(config, **{key: resolved})
            else:
                raise ConfigError(f"{path}: line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(
                f"{path}: line {lineno}: bad value for {key!r}: {value!r}"
            ) from exc
    _validate(config, path)
    return config


def _validate(config: ExperimentConfig, path: Path) -> None:
    if config.fb_docs < 1 or config.fb_terms < 1:
        raise ConfigError(f"{path}: fb_docs and fb_terms must be >= 1")
    if not 0.0 <= config.rm3_lambda <= 1.0:
        raise ConfigError(f"{path}: lambda must lie in [0, 1]")
    if config.mu <= 0:
        raise ConfigError(f"{path}: mu must be positive")
    if config.depth < 1 or config.top_n < 1:
        raise ConfigError(f"{path}: depth and top_n must be >= 1")
    if config.js_base <= 1.0:
        raise ConfigError(f"{path}: js_base must be > 1")


@dataclass
class ReportBundle:
    """Everything the reports (and the service) need from one run."""

    labels: list[str]
    decades: list[str]
    queries: list[QueryEntry]
    expansions: dict[tuple[str, str], ExpandedQuery]
    tau: dict[tuple[str, str], float | None]
    matrices: dict[str, ComparisonMatrix]
    config: ExperimentConfig

    def expansion(self, keyword: str, label: str) -> ExpandedQuery:
        return self.expansions[(keyword, label)]


def resolve_corpus(config: ExperimentConfig) -> PartitionedCorpus:
    """Load a persisted corpus if index_dir holds one, else build from the
    manifest."""
    if config.index_dir and (Path(config.index_dir) / f"{FULL_LABEL}.idx").exists():
        return load_corpus(config.index_dir)
    if config.manifest:
        stopwords = (
            load_stopwords(config.stopwords) if config.stopwords else None
        )
        return build_corpus(config.manifest, stopwords)
    raise ConfigError(
        "configuration names neither a loadable index_dir nor a manifest"
    )


def run_pipeline(
    config: ExperimentConfig,
    corpus: PartitionedCorpus | None = None,
    queries: list[QueryEntry] | None = None,
) -> ReportBundle:
    if corpus is None:
        corpus = resolve_corpus(config)
    if queries is None:
        queries = (
            load_query_set(config.queries) if config.queries else default_query_set()
        )
    decades = corpus.decades
    labels = corpus.labels
    expansion_config = config.expansion()

    expansions: dict[tuple[str, str], ExpandedQuery] = {}
    for entry in queries:
        for label in labels:
            expansions[(entry.keyword, label)] = expand_query(
                corpus, label, entry.keyword, expansion_config
            )

    # Second-stage retrieval: every non-absent expansion queries FULL.
    rankings: dict[tuple[str, str], object] = {}
    for entry in queries:
        for label in labels:
            exp = expansions[(entry.keyword, label)]
            if not exp.absent:
                rankings[(entry.keyword, label)] = full_collection_ranking(
                    corpus, exp, depth=config.depth, params=config.bm25()
                )

    tau: dict[tuple[str, str], float | None] = {}
    for entry in queries:
        reference = expansions[(entry.keyword, FULL_LABEL)]
        for decade in decades:
            if reference.absent or expansions[(entry.keyword, decade)].absent:
                tau[(entry.keyword, decade)] = None
            else:
                tau[(entry.keyword, decade)] = kendall_tau(
                    rankings[(entry.keyword, FULL_LABEL)],
                    rankings[(entry.keyword, decade)],
                )

    matrices = {
        "jaccard": _pair_matrix(
            "jaccard", labels, queries, expansions, config, _jaccard_value
        ),
        "jsd": _pair_matrix(
            "jsd", labels, queries, expansions, config, _jsd_value
        ),
    }
    return ReportBundle(
        labels=labels,
        decades=decades,
        queries=list(queries),
        expansions=expansions,
        tau=tau,
        matrices=matrices,
        config=config,
    )


def _jaccard_value(
    a: ExpandedQuery, b: ExpandedQuery, config: ExperimentConfig
) -> float:
    return jaccard(a.term_set(), b.term_set())


def _jsd_value(a: ExpandedQuery, b: ExpandedQuery, config: ExperimentConfig) -> float:
    return js_divergence(a.weights(), b.weights(), base=config.js_base)


def _pair_matrix(metric, labels, queries, expansions, config, value_fn):
    cells: dict[tuple[str, str], MetricCell | None] = {}
    for i, row in enumerate(labels):
        for col in labels[i:]:
            values = []
            for entry in queries:
                a = expansions[(entry.keyword, row)]
                b = expansions[(entry.keyword, col)]
                if a.absent or b.absent:
                    continue
                values.append(value_fn(a, b, config))
            cell = aggregate(values) if values else None
            cells[(row, col)] = cell
            cells[(col, row)] = cell
    return ComparisonMatrix(metric=metric, labels=list(labels), cells=cells)


# --------------------------------------------------------------------------
# Rendering.  All numbers are fixed-format so output is byte-reproducible.


def render_term_table(
    bundle: ReportBundle, keyword: str, top_n: int | None = None
) -> str:
    """Markdown table of the top expansion terms per collection.

    A term is emphasised when it also appears among the top terms of at
    least one other collection for the same keyword; absent collections get
    an explicit marker row.
    """
    if top_n is None:
        top_n = bundle.config.top_n
    entry = next((q for q in bundle.queries if q.keyword == keyword), None)
    if entry is None:
        raise KeyError(f"keyword {keyword!r} is not part of this run")
    top_terms = {
        label: [t for t, _ in bundle.expansion(keyword, label).top(top_n)]
        for label in bundle.labels
    }
    lines = [
        f"## {entry.keyword} ({entry.category})",
        "",
        "| Collection | Top feedback terms |",
        "| --- | --- |",
    ]
    for label in bundle.labels:
        exp = bundle.expansion(keyword, label)
        if exp.absent:
            lines.append(f"| {label} | _{ABSENT_MARKER}_ |")
            continue
        rendered = []
        for term in top_terms[label]:
            elsewhere = any(
                term in top_terms[other]
                for other in bundle.labels
                if other != label and not bundle.expansion(keyword, other).absent
            )
            rendered.append(f"**{term}**" if elsewhere else term)
        lines.append(f"| {label} | {', '.join(rendered)} |")
    lines.append("")
    return "\n".join(lines)


def render_term_tables(bundle: ReportBundle) -> str:
    parts = ["# Expansion term profiles", ""]
    parts.append(
        f"Top {bundle.config.top_n} expansion terms per query and collection. "
        "Emphasised terms also rank among the top terms of another "
        f"collection for the same query; _{ABSENT_MARKER}_ marks collections "
        "where the query term never occurs."
    )
    parts.append("")
    for entry in bundle.queries:
        parts.append(render_term_table(bundle, entry.keyword))
    return "\n".join(parts)


def render_tau_csv(bundle: ReportBundle) -> str:
    lines = ["keyword," + ",".join(bundle.decades)]
    for entry in bundle.queries:
        cells = []
        for decade in bundle.decades:
            value = bundle.tau[(entry.keyword, decade)]
            cells.append(ABSENT_MARKER if value is None else f"{value:.4f}")
        lines.append(f"{entry.keyword}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def render_pairs_csv(bundle: ReportBundle, metric: str) -> str:
    matrix = bundle.matrices[metric]
    lines = ["row,col,mean,std,n"]
    for row in matrix.labels:
        for col in matrix.labels:
            cell = matrix.cell(row, col)
            if cell is None:
                lines.append(f"{row},{col},,,0")
            else:
                lines.append(f"{row},{col},{cell.mean!r},{cell.std!r},{cell.n}")
    return "\n".join(lines) + "\n"


def _fmt_mean(cell: MetricCell | None) -> str:
    if cell is None:
        return ""
    if cell.mean == 1.0 and cell.std == 0.0:
        return "1"
    return f"{cell.mean:.4f}"


def _fmt_std(cell: MetricCell | None) -> str:
    if cell is None:
        return ""
    if cell.mean == 1.0 and cell.std == 0.0:
        return "(0)"
    return f"({cell.std:.4f})"


def render_matrix_markdown(bundle: ReportBundle) -> str:
    """Combined pairwise matrix: Jaccard above the diagonal, JSD below.

    Each label occupies two physical rows, the mean then the population
    standard deviation in parentheses.  Diagonal cells render as 1 / (0):
    a collection's expansion sets overlap themselves perfectly.  Pairs
    with no scorable query are left blank.
    """
    jac = bundle.matrices["jaccard"]
    jsd = bundle.matrices["jsd"]
    labels = bundle.labels
    lines = [
        "# Pairwise collection comparison",
        "",
        "Upper triangle: mean Jaccard overlap of expansion term sets.",
        "Lower triangle: mean Jensen-Shannon divergence of expansion "
        "weight distributions.",
        "Second row of each pair: population standard deviation.",
        "",
        "| | " + " | ".join(labels) + " |",
        "| --- |" + " --- |" * len(labels),
    ]
    for i, row in enumerate(labels):
        means = []
        stds = []
        for j, col in enumerate(labels):
            if j >= i:
                cell = jac.cell(row, col) if j > i else _diagonal_cell(jac, row)
            else:
                cell = jsd.cell(row, col)
            if j == i:
                means.append(_fmt_mean(cell))
                stds.append(_fmt_std(cell))
            else:
                means.append("" if cell is None else f"{cell.mean:.4f}")
                stds.append("" if cell is None else f"({cell.std:.4f})")
        lines.append(f"| **{row}** | " + " | ".join(means) + " |")
        lines.append("| | " + " | ".join(stds) + " |")
    lines.append("")
    return "\n".join(lines)


def _diagonal_cell(matrix: ComparisonMatrix, label: str) -> MetricCell | None:
    cell = matrix.cell(label, label)
    if cell is None:
        return None
    # The Jaccard self-comparison is identically 1; render it as the exact
    # 1 / (0) pair whatever floating-point dust aggregation left behind.
    return MetricCell(mean=1.0, std=0.0, n=cell.n)


REPORT_FILES = (
    "term_tables.md",
    "tau.csv",
    "pairs_jaccard.csv",
    "pairs_jsd.csv",
    "matrix.md",
)


def write_reports(bundle: ReportBundle, out_dir: str | Path) -> list[Path]:
    """Write the five report files and return their paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    contents = {
        "term_tables.md": render_term_tables(bundle),
        "tau.csv": render_tau_csv(bundle),
        "pairs_jaccard.csv": render_pairs_csv(bundle, "jaccard"),
        "pairs_jsd.csv": render_pairs_csv(bundle, "jsd"),
        "matrix.md": render_matrix_markdown(bundle),
    }
    written = []
    for name in REPORT_FILES:
        path = out / name
        path.write_text(contents[name], encoding="utf-8")
        written.append(path)
    return written
