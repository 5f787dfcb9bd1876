from __future__ import annotations

import random
import string

import pytest

from lexidrift.corpus import Paragraph
from lexidrift.index import Index, build_index

_LETTERS = string.ascii_lowercase


def term_name(i: int) -> str:
    """Deterministic all-letter term names: taa, tab, ..., tba, ..."""
    return "t" + _LETTERS[(i // 26) % 26] + _LETTERS[i % 26]


def random_paragraphs(
    rng: random.Random,
    n_docs: int,
    vocab_size: int,
    decades: tuple[str, ...] = ("1840s", "1860s", "1890s"),
    max_len: int = 30,
) -> list[Paragraph]:
    vocab = [term_name(i) for i in range(vocab_size)]
    paragraphs = []
    for i in range(n_docs):
        novel_id = f"nov{i % 4}"
        tokens = tuple(
            rng.choice(vocab) for _ in range(rng.randint(3, max_len))
        )
        paragraphs.append(
            Paragraph(
                doc_id=f"{novel_id}#p{i:05d}",
                novel_id=novel_id,
                decade=decades[i % len(decades)],
                tokens=tokens,
            )
        )
    return paragraphs


def docs_of(paragraphs: list[Paragraph]) -> dict[str, list[str]]:
    """Plain doc_id -> token list view for the oracle implementations."""
    return {p.doc_id: list(p.tokens) for p in paragraphs}


def random_index(
    rng: random.Random, n_docs: int, vocab_size: int, label: str = "FULL"
) -> tuple[Index, dict[str, list[str]]]:
    paragraphs = random_paragraphs(rng, n_docs, vocab_size)
    return build_index(paragraphs, label), docs_of(paragraphs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
