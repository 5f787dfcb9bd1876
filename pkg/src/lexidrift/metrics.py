"""Drift metrics: set overlap, rank correlation, distribution divergence.

Three views of how a concept's neighbourhood differs between collections:
Jaccard overlap of expansion term sets, Kendall tau-b correlation of the
rankings their expansions induce, and Jensen-Shannon divergence of the
expansion weight distributions.  Per-pair values are aggregated over the
query set as mean and population standard deviation.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from scipy import stats as _scipy_stats

from lexidrift.retrieval import RankedList


def jaccard(a: set[str], b: set[str]) -> float:
    """|a & b| / |a | b|; two empty sets count as identical (1.0)."""
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def kendall_tau(a: RankedList, b: RankedList) -> float:
    """Kendall tau-b between two rankings of the same document space.

    The comparison runs over the union of retrieved doc_ids.  A document
    missing from one list is assigned rank depth+1 there, so all absentees
    of a list are tied below its retrieved documents; tau-b's tie
    correction accounts for them.  Degenerate cases (fewer than two union
    documents, or a ranking with no rank variation, e.g. one empty list)
    have no defined correlation and are reported as 0.0.

    Raises ValueError when both lists are empty: there is nothing to
    compare and a silent 0 would be misleading.
    """
    if not a.entries and not b.entries:
        raise ValueError("both rankings are empty")
    rank_a = {doc_id: i for i, (doc_id, _) in enumerate(a.entries, start=1)}
    rank_b = {doc_id: i for i, (doc_id, _) in enumerate(b.entries, start=1)}
    union = sorted(set(rank_a) | set(rank_b))
    if len(union) < 2:
        return 0.0
    absent_a = a.depth + 1
    absent_b = b.depth + 1
    xs = [rank_a.get(d, absent_a) for d in union]
    ys = [rank_b.get(d, absent_b) for d in union]
    tau = _scipy_stats.kendalltau(xs, ys, variant="b").statistic
    if math.isnan(tau):
        return 0.0
    return float(tau)


def js_divergence(
    p: dict[str, float], q: dict[str, float], base: float = 2.0
) -> float:
    """Jensen-Shannon divergence between two term distributions.

    Supports are unioned with implicit zeros; 0*log(0) terms contribute
    nothing.  With base 2 the value lies in [0, 1], reaching 0 only for
    identical distributions and 1 only for disjoint supports.  Inputs must
    already be normalised (sum to 1 within 1e-9).  The result is clamped
    to the mathematical range [0, log_base(2)]: summation order can leave
    an epsilon of rounding dust past either end.
    """
    if base <= 1.0:
        raise ValueError("base must be > 1")
    for name, dist in (("p", p), ("q", q)):
        if not dist:
            raise ValueError(f"{name} is empty")
        total = math.fsum(dist.values())
        if any(w < 0 for w in dist.values()) or abs(total - 1.0) > 1e-9:
            raise ValueError(f"{name} is not a normalised distribution")
    log_base = math.log(base)
    div = 0.0
    for term in p.keys() | q.keys():
        pi = p.get(term, 0.0)
        qi = q.get(term, 0.0)
        mi = 0.5 * (pi + qi)
        if pi > 0.0:
            div += 0.5 * pi * math.log(pi / mi)
        if qi > 0.0:
            div += 0.5 * qi * math.log(qi / mi)
    value = div / log_base
    upper = math.log(2.0) / log_base
    return min(max(value, 0.0), upper)


@dataclass(frozen=True)
class MetricCell:
    """Aggregate of one metric over the scored queries of one pair."""

    mean: float
    std: float
    n: int


def aggregate(values: list[float]) -> MetricCell:
    """Mean and population standard deviation; n is the sample count."""
    if not values:
        raise ValueError("no values to aggregate")
    mean = math.fsum(values) / len(values)
    std = statistics.pstdev(values, mu=mean)
    return MetricCell(mean=mean, std=std, n=len(values))


@dataclass
class ComparisonMatrix:
    """Symmetric label-by-label aggregate matrix; None marks pairs with no
    scorable query (the keyword was absent from one or both collections)."""

    metric: str
    labels: list[str]
    cells: dict[tuple[str, str], MetricCell | None]

    def cell(self, row: str, col: str) -> MetricCell | None:
        return self.cells[(row, col)]
