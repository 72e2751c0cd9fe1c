from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from ..common.exceptions import MatcherStageError
from ..common.logging import get_logger
from .intervals import IntervalFamilies, RichInterval
from .params import MatcherThresholds

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClosePairGraph:
    """Bipartite graph of interval pairs whose shifted left positions are within ``radius``."""

    left: tuple[RichInterval, ...]
    right: tuple[RichInterval, ...]
    q: int
    t: int
    radius: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def max_degree(self) -> int:
        if not self.edges:
            return 0
        left = np.bincount([i for i, _ in self.edges], minlength=len(self.left))
        right = np.bincount([j for _, j in self.edges], minlength=len(self.right))
        return int(max(left.max(), right.max()))


@dataclass(frozen=True)
class ShiftChoice:
    graph: ClosePairGraph
    shifts_evaluated: int
    average_edges: float
    expected_edge_floor: float
    asymptotic_edge_floor: float

    @property
    def q(self) -> int:
        return self.graph.q


def _left_positions(intervals: Sequence[RichInterval]) -> np.ndarray:
    return np.asarray([interval.lp for interval in intervals], dtype=np.int64)


def close_pair_graph(
    left: Sequence[RichInterval],
    right: Sequence[RichInterval],
    q: int,
    t: int,
    thresholds: MatcherThresholds,
) -> ClosePairGraph:
    radius = thresholds.close_radius(t)
    lp1, lp2 = _left_positions(left), _left_positions(right)
    lo = np.searchsorted(lp2, lp1 + q - radius, "left")
    hi = np.searchsorted(lp2, lp1 + q + radius, "right")
    edges = tuple((i, j) for i in range(len(left)) for j in range(int(lo[i]), int(hi[i])))
    return ClosePairGraph(
        left=tuple(left), right=tuple(right), q=q, t=t, radius=radius, edges=edges
    )


def edge_counts_by_shift(
    lp1: np.ndarray, lp2: np.ndarray, shifts: np.ndarray, radius: int
) -> np.ndarray:
    """|E(Q)| for every Q in ``shifts`` from one histogram of position differences."""
    if len(shifts) == 0:
        return np.zeros(0, dtype=np.int64)
    reach = int(np.abs(shifts).max()) + radius
    lo = np.searchsorted(lp2, lp1 - reach, "left")
    hi = np.searchsorted(lp2, lp1 + reach, "right")
    counts = hi - lo
    total = int(counts.sum())
    if total == 0:
        return np.zeros(len(shifts), dtype=np.int64)
    owners = np.repeat(np.arange(len(lp1)), counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    differences = lp2[np.repeat(lo, counts) + offsets] - lp1[owners]
    histogram = np.bincount(differences + reach, minlength=2 * reach + 1)
    prefix = np.concatenate(([0], np.cumsum(histogram)))
    upper = shifts + radius + reach + 1
    lower = shifts - radius + reach
    return prefix[upper] - prefix[lower]


def best_shift(
    families: IntervalFamilies,
    thresholds: MatcherThresholds,
    *,
    strategy: Literal["exhaustive", "sampled"] = "exhaustive",
    sample_count: int = 64,
    seed: int = 0,
    beta_eff: float | None = None,
) -> ShiftChoice:
    """Pick Q maximizing the close-pair edge count; ties go to the smallest |Q|, then smallest Q."""
    left, right = families.intervals_1, families.intervals_2
    if not left or not right:
        raise MatcherStageError("no rich intervals to align")
    t = families.t
    radius = thresholds.close_radius(t)
    candidates = np.arange(-(thresholds.block_ones - 1), thresholds.block_ones, dtype=np.int64)
    if strategy == "sampled" and sample_count < len(candidates):
        rng = np.random.Generator(np.random.Philox(seed))
        candidates = np.sort(rng.choice(candidates, size=sample_count, replace=False))

    counts = edge_counts_by_shift(_left_positions(left), _left_positions(right), candidates, radius)
    order = np.lexsort((candidates, np.abs(candidates), -counts))
    q = int(candidates[order[0]])
    graph = close_pair_graph(left, right, q, t, thresholds)

    span = 2 * thresholds.block_ones - 1
    pairs_beyond_first = sum(
        s.intervals_1 * s.intervals_2 for s in families.blocks if s.block >= 1
    )
    expected = min(radius, span) / span * pairs_beyond_first
    beta = beta_eff if beta_eff is not None else thresholds.block_ones / thresholds.scale
    asymptotic_probability = (thresholds.n ** (t / thresholds.r) / 20) / (
        2 * beta * thresholds.scale
    )
    logger.info(
        "Shift chosen: Q=%s edges=%s evaluated=%s strategy=%s",
        q,
        graph.edge_count,
        len(candidates),
        strategy,
    )
    return ShiftChoice(
        graph=graph,
        shifts_evaluated=len(candidates),
        average_edges=float(counts.mean()),
        expected_edge_floor=float(expected),
        asymptotic_edge_floor=float(min(asymptotic_probability, 1.0) * pairs_beyond_first),
    )
