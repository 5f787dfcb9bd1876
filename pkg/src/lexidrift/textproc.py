"""Text normalisation pipeline: tokenize, drop stopwords, stem.

The pipeline is deliberately rigid because every index, query and report in
the package must agree on the term space.  Tokenization lowercases the text
and keeps maximal runs of ASCII letters, so digits, punctuation, underscores
and accented characters all act as separators.  Stopwords are removed from
the raw tokens *before* stemming (the list contains surface forms).
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

TOKEN_RE = re.compile(r"[a-z]+")

_default_stopwords: frozenset[str] | None = None


def tokenize(text: str) -> list[str]:
    """Lowercase and split into maximal runs of ASCII letters."""
    return TOKEN_RE.findall(text.lower())


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one lowercase word per line, # comments."""
    words = set()
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return frozenset(words)


def default_stopwords() -> frozenset[str]:
    """The stopword list shipped with the package (cached)."""
    global _default_stopwords
    if _default_stopwords is None:
        ref = resources.files("lexidrift.data").joinpath("stopwords.txt")
        with resources.as_file(ref) as path:
            _default_stopwords = load_stopwords(path)
    return _default_stopwords


def remove_stopwords(
    tokens: list[str], stopwords: frozenset[str] | None = None
) -> list[str]:
    if stopwords is None:
        stopwords = default_stopwords()
    return [t for t in tokens if t not in stopwords]


def stem(token: str) -> str:
    from lexidrift.porter import stem_word

    return stem_word(token)


def analyze(text: str, stopwords: frozenset[str] | None = None) -> list[str]:
    """Full pipeline: tokenize -> remove stopwords -> Porter stem.

    Order preserved, duplicates kept; returns [] for text with no
    indexable content.
    """
    from lexidrift.porter import stem_word

    if stopwords is None:
        stopwords = default_stopwords()
    return [stem_word(t) for t in tokenize(text) if t not in stopwords]
