"""Corpus ingestion: manifests, paragraph segmentation, decade partitions.

A corpus is a set of novels listed in a JSONL manifest.  Each novel belongs
to one decade partition keyed by its publication year; decade spans run from
x1 to x0 inclusive (the 1840s are 1841-1850), the first span starts at 1831
and the last is truncated at 1899.  The retrieval unit is the paragraph, and
the FULL collection is simply the union of the decade partitions.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from lexidrift.index import Index, build_index, load_index, save_index
from lexidrift.textproc import analyze, default_stopwords

logger = logging.getLogger(__name__)

FULL_LABEL = "FULL"
DECADE_LABELS = ("1830s", "1840s", "1850s", "1860s", "1870s", "1880s", "1890s")
YEAR_MIN = 1831
YEAR_MAX = 1899


class ManifestError(ValueError):
    """Raised for malformed manifest lines or invalid record fields."""


class YearOutOfRangeError(ValueError):
    """Raised when a publication year falls outside the covered spans."""


class UnknownCollectionError(KeyError):
    """Raised when a collection label names no indexed partition."""


def assign_decade(year: int) -> str:
    """Map a publication year to its decade label, e.g. 1845 -> "1840s"."""
    if not isinstance(year, int) or isinstance(year, bool):
        raise YearOutOfRangeError(f"year must be an integer, got {year!r}")
    if not YEAR_MIN <= year <= YEAR_MAX:
        raise YearOutOfRangeError(
            f"year {year} outside covered range {YEAR_MIN}-{YEAR_MAX}"
        )
    return f"{(year - 1) // 10 * 10}s"


@dataclass(frozen=True)
class ManifestRecord:
    novel_id: str
    title: str
    year: int
    path: str


@dataclass(frozen=True)
class Paragraph:
    """One segmented, analysed paragraph; the unit of retrieval."""

    doc_id: str
    novel_id: str
    decade: str
    tokens: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.tokens)


def load_manifest(path: str | Path) -> list[ManifestRecord]:
    """Parse a JSONL manifest; errors carry 1-based line numbers."""
    records: list[ManifestRecord] = []
    seen_ids: set[str] = set()
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ManifestError(f"line {lineno}: invalid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise ManifestError(f"line {lineno}: expected an object")
        novel_id = obj.get("id")
        if not isinstance(novel_id, str) or not novel_id:
            raise ManifestError(f"line {lineno}: missing or empty 'id'")
        if novel_id in seen_ids:
            raise ManifestError(f"line {lineno}: duplicate novel id {novel_id!r}")
        year = obj.get("year")
        if not isinstance(year, int) or isinstance(year, bool):
            raise ManifestError(f"line {lineno}: 'year' must be an integer")
        rel_path = obj.get("path")
        if not isinstance(rel_path, str) or not rel_path:
            raise ManifestError(f"line {lineno}: missing or empty 'path'")
        title = obj.get("title", "")
        if not isinstance(title, str):
            raise ManifestError(f"line {lineno}: 'title' must be a string")
        seen_ids.add(novel_id)
        records.append(ManifestRecord(novel_id, title, year, rel_path))
    return records


def segment_paragraphs(
    text: str,
    novel_id: str,
    decade: str,
    stopwords: frozenset[str] | None = None,
) -> list[Paragraph]:
    """Split novel text into paragraphs and analyse each one.

    A paragraph is a maximal run of non-blank lines (after newline
    normalisation).  Runs whose analysed token list is empty are dropped;
    ordinals count only the kept paragraphs, so doc_ids are consecutive.
    """
    normalised = text.replace("\r\n", "\n").replace("\r", "\n")
    paragraphs: list[Paragraph] = []
    run: list[str] = []

    def flush() -> None:
        if not run:
            return
        tokens = analyze("\n".join(run), stopwords)
        run.clear()
        if not tokens:
            return
        ordinal = len(paragraphs) + 1
        paragraphs.append(
            Paragraph(
                doc_id=f"{novel_id}#p{ordinal:05d}",
                novel_id=novel_id,
                decade=decade,
                tokens=tuple(tokens),
            )
        )

    for line in normalised.split("\n"):
        if line.strip():
            run.append(line)
        else:
            flush()
    flush()
    return paragraphs


@dataclass
class PartitionedCorpus:
    """Decade-partitioned indices plus the FULL union index."""

    indices: dict[str, Index]
    stopwords: frozenset[str] = field(default_factory=default_stopwords)

    @property
    def decades(self) -> list[str]:
        """Chronological decade labels that actually hold documents."""
        return [d for d in DECADE_LABELS if d in self.indices]

    @property
    def labels(self) -> list[str]:
        return self.decades + [FULL_LABEL]

    @property
    def full(self) -> Index:
        return self.indices[FULL_LABEL]

    def index_for(self, label: str) -> Index:
        try:
            return self.indices[label]
        except KeyError:
            raise UnknownCollectionError(label) from None


def corpus_from_paragraphs(
    paragraphs: list[Paragraph], stopwords: frozenset[str] | None = None
) -> PartitionedCorpus:
    """Build decade indices and the FULL index from segmented paragraphs."""
    if stopwords is None:
        stopwords = default_stopwords()
    by_decade: dict[str, list[Paragraph]] = {}
    for p in paragraphs:
        by_decade.setdefault(p.decade, []).append(p)
    indices = {
        label: build_index(by_decade[label], label, stopwords)
        for label in DECADE_LABELS
        if label in by_decade
    }
    indices[FULL_LABEL] = build_index(paragraphs, FULL_LABEL, stopwords)
    return PartitionedCorpus(indices=indices, stopwords=stopwords)


def build_corpus(
    manifest_path: str | Path,
    stopwords: frozenset[str] | None = None,
) -> PartitionedCorpus:
    """Ingest every novel in a manifest into a partitioned corpus.

    Novels whose year falls outside the covered spans are skipped with a
    warning rather than aborting the build.  Paths are resolved relative to
    the manifest's directory.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    manifest_path = Path(manifest_path)
    records = load_manifest(manifest_path)
    base = manifest_path.parent
    paragraphs: list[Paragraph] = []
    for record in records:
        try:
            decade = assign_decade(record.year)
        except YearOutOfRangeError:
            logger.warning(
                "skipping novel %s: year %d outside %d-%d",
                record.novel_id,
                record.year,
                YEAR_MIN,
                YEAR_MAX,
            )
            continue
        text = (base / record.path).read_text(encoding="utf-8", errors="replace")
        paragraphs.extend(
            segment_paragraphs(text, record.novel_id, decade, stopwords)
        )
    if not paragraphs:
        raise ManifestError("manifest yielded no indexable paragraphs")
    return corpus_from_paragraphs(paragraphs, stopwords)


def save_corpus(corpus: PartitionedCorpus, out_dir: str | Path) -> list[Path]:
    """Persist every partition index as <label>.idx under out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for label in corpus.labels:
        path = out / f"{label}.idx"
        save_index(corpus.indices[label], path)
        written.append(path)
    return written


def load_corpus(index_dir: str | Path) -> PartitionedCorpus:
    """Load a corpus persisted by save_corpus."""
    index_dir = Path(index_dir)
    indices: dict[str, Index] = {}
    for path in sorted(index_dir.glob("*.idx")):
        idx = load_index(path)
        indices[idx.label] = idx
    if FULL_LABEL not in indices:
        raise FileNotFoundError(f"no {FULL_LABEL}.idx found in {index_dir}")
    return PartitionedCorpus(
        indices=indices, stopwords=indices[FULL_LABEL].stopwords
    )
