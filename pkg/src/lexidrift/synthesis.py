"""Synthetic corpora with controlled vocabulary drift.

Two generators share one idea: every keyword is planted inside a context
pool of co-occurring words, and drift is induced by changing that pool
between partitions.

* drift_corpus builds a tiny two-partition in-memory corpus with one
  keyword whose context is replaced wholesale between partitions and one
  whose context is held fixed.  It is the ground truth for checking that
  the drift metrics order a drifting concept above a stable one.

* generate_manifest writes a file-backed corpus (novel text files plus a
  JSONL manifest) spanning all seven decades, with context pools that
  slide gradually decade by decade.  It exists because the corpus the
  pipeline was designed around cannot be redistributed; the generated
  novels give the CLI, the experiment protocol and the explorer something
  realistic to chew on.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from lexidrift.corpus import (
    DECADE_LABELS,
    Paragraph,
    PartitionedCorpus,
    corpus_from_paragraphs,
)

_DRIFT_KEYWORD = "meteor"
_STABLE_KEYWORD = "anchor"

_DRIFT_CTX_OLD = (
    "omen", "comet", "portent", "heaven", "prophet",
    "doom", "altar", "prayer", "scripture", "miracle",
)
_DRIFT_CTX_NEW = (
    "telescope", "observatory", "orbit", "physic", "spectrum",
    "professor", "journal", "instrument", "measurement", "catalogue",
)
_STABLE_CTX = (
    "ship", "sailor", "deck", "rope", "tide",
    "wharf", "cargo", "storm", "compass", "voyage",
)


def _fillers(n: int) -> list[str]:
    # Deterministic pseudo-words, disjoint from every planted word.
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    out = []
    for i in range(n):
        out.append("fil" + alphabet[i // 26] + alphabet[i % 26])
    return out


def drift_corpus(
    seed: int,
    paragraphs_per_group: int = 50,
    filler_vocab: int = 60,
) -> tuple[PartitionedCorpus, str, str]:
    """Two-partition corpus with a drifting and a stable planted keyword.

    Partitions are the 1840s and 1890s.  The drifting keyword co-occurs
    with one context set in the first partition and a disjoint one in the
    second; the stable keyword keeps the same context set in both.
    Returns (corpus, drifting_keyword, stable_keyword); paragraphs carry
    already-analysed tokens.
    """
    rng = random.Random(seed)
    fillers = _fillers(filler_vocab)
    partitions = (
        ("1840s", _DRIFT_CTX_OLD),
        ("1890s", _DRIFT_CTX_NEW),
    )
    paragraphs: list[Paragraph] = []
    for decade, drift_ctx in partitions:
        groups = (
            ("drift", _DRIFT_KEYWORD, drift_ctx),
            ("stable", _STABLE_KEYWORD, _STABLE_CTX),
            ("noise", None, ()),
        )
        for group_name, keyword, ctx in groups:
            novel_id = f"{decade}-{group_name}"
            for i in range(1, paragraphs_per_group + 1):
                if keyword is None:
                    tokens = rng.sample(fillers, 10)
                else:
                    tokens = (
                        [keyword]
                        + rng.sample(list(ctx), 5)
                        + rng.sample(fillers, 5)
                    )
                    rng.shuffle(tokens)
                paragraphs.append(
                    Paragraph(
                        doc_id=f"{novel_id}#p{i:05d}",
                        novel_id=novel_id,
                        decade=decade,
                        tokens=tuple(tokens),
                    )
                )
    corpus = corpus_from_paragraphs(paragraphs, stopwords=frozenset())
    return corpus, _DRIFT_KEYWORD, _STABLE_KEYWORD


# --------------------------------------------------------------------------
# File-backed corpus generation.

_KEYWORDS = (
    "immigrant", "emigrant", "foreign", "newcomer", "alien",
    "enslaved", "colony", "vampire",
    "engagement", "proposal", "wedding", "suitor", "lover",
    "betrothal", "eligible", "consent", "love", "mesalliance",
    "heiress", "eviction",
    "crime", "murder", "mystery", "villain", "adventure",
)

# Keywords introduced late, to exercise the Absent machinery: the decade
# index (0 = 1830s) from which the keyword occurs at all.
_FIRST_DECADE = {"immigrant": 1, "vampire": 4, "mesalliance": 3}

_FILLER_WORDS = (
    "house", "garden", "window", "street", "carriage", "horse", "candle",
    "letter", "evening", "morning", "winter", "summer", "river", "bridge",
    "church", "doctor", "sister", "brother", "mother", "father", "daughter",
    "cousin", "friend", "stranger", "servant", "master", "school", "child",
    "village", "town", "market", "shop", "money", "fortune", "estate",
    "field", "forest", "hill", "valley", "cloud", "rain", "snow", "fire",
    "shadow", "silence", "voice", "music", "dance", "dinner", "supper",
    "breakfast", "tea", "bread", "wine", "table", "chair", "room", "door",
    "wall", "floor", "stair", "roof", "lamp", "book", "page", "pen",
    "paper", "journey", "road", "path", "gate", "wood", "stone", "tower",
    "castle", "cottage", "farm", "meadow", "sheep", "cattle", "dog", "cat",
    "bird", "tree", "flower", "grass", "leaf", "branch", "root", "seed",
    "captain", "soldier", "ship", "harbor", "storm", "wave", "shore",
    "island", "cliff", "light", "dark", "night", "noon", "dusk", "dawn",
    "week", "month", "season", "clock", "watch", "bell", "sound", "step",
    "hall", "parlour", "kitchen", "cellar", "attic", "chamber", "curtain",
    "mirror", "portrait", "frame", "desk", "drawer", "key", "lock", "coat",
    "dress", "glove", "hat", "shoe", "ribbon", "lace", "silk", "wool",
    "cotton", "thread", "needle", "basket", "bundle", "parcel", "coin",
    "purse", "guinea", "shilling", "pound", "orchard", "stable", "saddle",
    "whip", "fence", "hedge", "pond", "mill", "wheel", "cart", "lane",
)

_CONTEXT_BANK = (
    "justice", "court", "trial", "prison", "warden", "constable",
    "inspector", "witness", "verdict", "gallows", "pistol", "poison",
    "dagger", "cloak", "midnight", "whisper", "secret", "rumor", "scandal",
    "honor", "duty", "pride", "shame", "grief", "sorrow", "joy", "hope",
    "despair", "passion", "temper", "quarrel", "promise", "vow", "ring",
    "chapel", "altar", "veil", "bouquet", "feast", "toast", "waltz",
    "courtship", "dowry", "inheritance", "deed", "lawyer", "clerk",
    "banker", "merchant", "trade", "cargo", "vessel", "port", "quay",
    "voyage", "passage", "steerage", "settler", "frontier", "plantation",
    "prairie", "desert", "jungle", "tribe", "native", "chief", "spear",
    "hut", "fever", "surgeon", "nurse", "medicine", "remedy", "plague",
    "cholera", "workhouse", "factory", "loom", "engine", "railway",
    "station", "telegraph", "omnibus", "lantern", "fog", "gaslight",
    "alley", "tavern", "inn", "landlord", "tenant", "rent", "lease",
    "notice", "bailiff", "magistrate", "parish", "vicar", "curate",
    "sermon", "congregation", "charity", "orphan", "widow", "governess",
    "tutor", "pupil", "lesson", "pianoforte", "drawing", "needlework",
    "embroidery", "bonnet", "parasol", "shawl", "muslin", "crinoline",
    "banquet", "ballroom", "terrace", "conservatory", "grove",
)

_GLUE_WORDS = ("the", "of", "and", "a", "in", "with", "was", "had", "at", "on")

_CTX_POOL_SIZE = 12
_CTX_SLIDE = 3


def _context_pool(keyword_index: int, decade_index: int) -> list[str]:
    """A 12-word window into the context bank; the window slides with the
    decade, so neighbouring decades share most of a keyword's context and
    distant decades share little."""
    start = (keyword_index * 17 + decade_index * _CTX_SLIDE) % len(_CONTEXT_BANK)
    pool = []
    for offset in range(_CTX_POOL_SIZE):
        pool.append(_CONTEXT_BANK[(start + offset) % len(_CONTEXT_BANK)])
    return pool


def _paragraph_text(rng: random.Random, words: list[str]) -> str:
    """Realise a word list as sentence-shaped prose with glue words."""
    out: list[str] = []
    for word in words:
        if rng.random() < 0.45:
            out.append(rng.choice(_GLUE_WORDS))
        out.append(word)
    sentences = []
    i = 0
    while i < len(out):
        n = rng.randint(6, 11)
        chunk = out[i : i + n]
        i += n
        sentences.append(" ".join(chunk).capitalize() + ".")
    text = " ".join(sentences)
    # Wrap to plausible line lengths; paragraphs are line runs, so wrapped
    # lines must stay non-blank.
    lines = []
    words_iter = text.split(" ")
    line: list[str] = []
    for w in words_iter:
        line.append(w)
        if sum(len(x) + 1 for x in line) > 68:
            lines.append(" ".join(line))
            line = []
    if line:
        lines.append(" ".join(line))
    return "\n".join(lines)


def generate_manifest(
    out_dir: str | Path,
    seed: int = 0,
    novels_per_decade: int = 4,
    paragraphs_per_novel: int = 50,
) -> Path:
    """Write a synthetic decade-spanning corpus; returns the manifest path.

    Novels land under <out_dir>/novels/ and the manifest at
    <out_dir>/manifest.jsonl.  Deterministic for a given seed and sizing.
    """
    out = Path(out_dir)
    novels_dir = out / "novels"
    novels_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(seed)
    manifest_lines = []
    for decade_index, decade in enumerate(DECADE_LABELS):
        decade_start = int(decade[:4])
        span = range(decade_start + 1, min(decade_start + 10, 1899) + 1)
        active = [
            (ki, kw)
            for ki, kw in enumerate(_KEYWORDS)
            if decade_index >= _FIRST_DECADE.get(kw, 0)
        ]
        for j in range(novels_per_decade):
            novel_id = f"{decade}n{j:02d}"
            year = span[(j * 7) % len(span)]
            title = f"A {decade} tale no. {j + 1}"
            chunks = []
            for _ in range(paragraphs_per_novel):
                if active and rng.random() < 0.55:
                    ki, kw = active[rng.randrange(len(active))]
                    pool = _context_pool(ki, decade_index)
                    words = (
                        [kw] * rng.randint(1, 2)
                        + rng.sample(pool, rng.randint(3, 5))
                        + rng.sample(_FILLER_WORDS, rng.randint(10, 16))
                    )
                else:
                    words = rng.sample(_FILLER_WORDS, rng.randint(12, 20))
                rng.shuffle(words)
                chunks.append(_paragraph_text(rng, words))
            path = novels_dir / f"{novel_id}.txt"
            path.write_text("\n\n".join(chunks) + "\n", encoding="utf-8")
            manifest_lines.append(
                json.dumps(
                    {
                        "id": novel_id,
                        "title": title,
                        "year": year,
                        "path": f"novels/{novel_id}.txt",
                    }
                )
            )
    manifest_path = out / "manifest.jsonl"
    manifest_path.write_text("\n".join(manifest_lines) + "\n", encoding="utf-8")
    return manifest_path
