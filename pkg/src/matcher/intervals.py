from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..common.exceptions import MatcherStageError
from ..words.core import Word
from .annotation import AnnotatedWord, rich_window_starts
from .params import MatcherThresholds
from .selection import PairSelection


@dataclass(frozen=True)
class BlockPartition:
    """Blocks [a_(k-1), a_k) where a_k is the index of the (k*B + 1)'th one; a_0 = 0."""

    block_ones: int
    boundaries: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]

    def block_of(self, index: int) -> int:
        return int(np.searchsorted(np.asarray(self.boundaries, dtype=np.int64), index, "right"))


@dataclass(frozen=True)
class RichInterval:
    word: int
    start: int
    end: int
    good_zero_count: int
    ones_count: int
    zero_count: int
    lp: int
    rp: int
    block: int
    ordinal: int


@dataclass(frozen=True)
class BlockSummary:
    block: int
    consistent: int
    intervals_1: int
    intervals_2: int
    coverage_1: float
    coverage_2: float


@dataclass(frozen=True)
class IntervalFamilies:
    t: int
    consistent_ordinals: tuple[int, ...]
    intervals_1: tuple[RichInterval, ...]
    intervals_2: tuple[RichInterval, ...]
    blocks: tuple[BlockSummary, ...]

    def per_block_counts(self) -> dict[int, tuple[int, int]]:
        return {s.block: (s.intervals_1, s.intervals_2) for s in self.blocks}


def partition_blocks(w: Word, block_ones: int) -> BlockPartition:
    if block_ones < 1:
        raise ValueError(f"block_ones must be >= 1, got {block_ones}")
    ones = np.flatnonzero(np.asarray(w.symbols, dtype=np.int8) == 1)
    boundaries = tuple(ones[block_ones::block_ones].tolist())
    edges = (0,) + boundaries + (len(w),)
    blocks = tuple((edges[i], edges[i + 1]) for i in range(len(edges) - 1))
    return BlockPartition(block_ones=block_ones, boundaries=boundaries, blocks=blocks)


def greedy_disjoint(spans: Sequence[tuple[int, int]]) -> list[int]:
    """Indices of a maximal disjoint subfamily of closed spans, earliest end first."""
    order = sorted(range(len(spans)), key=lambda i: (spans[i][1], spans[i][0], i))
    chosen: list[int] = []
    last_end: int | None = None
    for i in order:
        start, end = spans[i]
        if last_end is None or start > last_end:
            chosen.append(i)
            last_end = end
    return sorted(chosen, key=lambda i: spans[i][0])


@dataclass(frozen=True, eq=False)
class _GoodZeros:
    ordinal_to_rank: dict[int, int]
    indices: np.ndarray
    positions: np.ndarray
    zero_prefix: np.ndarray


def _good_zeros(annotated: AnnotatedWord) -> _GoodZeros:
    mask = annotated.good_mask
    ordinals = np.flatnonzero(mask) + 1
    symbols = np.asarray(annotated.word.symbols, dtype=np.int8)
    zero_prefix = np.concatenate(([0], np.cumsum(symbols == 0)))
    return _GoodZeros(
        ordinal_to_rank={int(o): rank for rank, o in enumerate(ordinals.tolist())},
        indices=annotated.zero_indices[mask],
        positions=annotated.positions[mask],
        zero_prefix=zero_prefix,
    )


def _interval_for(
    word_slot: int,
    ordinal: int,
    good: _GoodZeros,
    starts: np.ndarray,
    length: int,
    blocks: BlockPartition,
) -> RichInterval:
    rank = good.ordinal_to_rank[ordinal]
    lo = int(np.searchsorted(starts, rank - length + 1, "left"))
    hi = int(np.searchsorted(starts, rank, "right"))
    if lo >= hi:
        raise MatcherStageError(f"zero {ordinal} has no 0-rich window of length {length}")
    home = blocks.block_of(int(good.indices[rank]))
    chosen = int(starts[lo])
    for a in starts[lo:hi].tolist():
        first, last = int(good.indices[a]), int(good.indices[a + length - 1])
        if blocks.block_of(first) == home and blocks.block_of(last) == home:
            chosen = a
            break

    first_index = int(good.indices[chosen])
    last_index = int(good.indices[chosen + length - 1])
    lp, rp = int(good.positions[chosen]), int(good.positions[chosen + length - 1])
    start_block, end_block = blocks.block_of(first_index), blocks.block_of(last_index)
    return RichInterval(
        word=word_slot,
        start=first_index,
        end=last_index,
        good_zero_count=length,
        ones_count=rp - lp,
        zero_count=int(good.zero_prefix[last_index + 1] - good.zero_prefix[first_index]),
        lp=lp,
        rp=rp,
        block=start_block if start_block == end_block else -1,
        ordinal=ordinal,
    )


def choose_rich_intervals(
    first: AnnotatedWord,
    second: AnnotatedWord,
    selection: PairSelection,
    blocks_1: BlockPartition,
    blocks_2: BlockPartition,
    thresholds: MatcherThresholds,
) -> IntervalFamilies:
    """One 0-rich interval per shared-type ordinal and word, then disjoint subfamilies per block."""
    if not selection.ordinals:
        raise MatcherStageError("empty ordinal set")
    t = selection.t
    length = thresholds.rich_length(t)
    max_ones = thresholds.rich_max_ones(t)

    chosen: list[list[RichInterval]] = [[], []]
    for slot, (annotated, blocks) in enumerate(((first, blocks_1), (second, blocks_2))):
        good = _good_zeros(annotated)
        starts = rich_window_starts(good.positions, length, max_ones)
        for ordinal in selection.ordinals:
            chosen[slot].append(_interval_for(slot, ordinal, good, starts, length, blocks))

    consistent = [
        (left, right)
        for left, right in zip(chosen[0], chosen[1])
        if left.block >= 0 and left.block == right.block
    ]
    block_ids = sorted({left.block for left, _ in consistent})
    zero_index = (
        dict(zip(range(1, len(first.zero_indices) + 1), first.zero_indices.tolist())),
        dict(zip(range(1, len(second.zero_indices) + 1), second.zero_indices.tolist())),
    )

    selected: list[list[RichInterval]] = [[], []]
    summaries: list[BlockSummary] = []
    for block in block_ids:
        members = [pair for pair in consistent if pair[0].block == block]
        counts: list[int] = []
        coverages: list[float] = []
        for slot in (0, 1):
            unique: dict[tuple[int, int], RichInterval] = {}
            for pair in members:
                interval = pair[slot]
                unique.setdefault((interval.start, interval.end), interval)
            candidates = list(unique.values())
            keep = [candidates[i] for i in greedy_disjoint([(c.start, c.end) for c in candidates])]
            selected[slot].extend(keep)
            counts.append(len(keep))
            targets = [zero_index[slot][pair[slot].ordinal] for pair in members]
            covered = sum(
                1 for index in targets if any(c.start <= index <= c.end for c in keep)
            )
            coverages.append(covered / len(targets))
        summaries.append(
            BlockSummary(
                block=block,
                consistent=len(members),
                intervals_1=counts[0],
                intervals_2=counts[1],
                coverage_1=coverages[0],
                coverage_2=coverages[1],
            )
        )

    return IntervalFamilies(
        t=t,
        consistent_ordinals=tuple(left.ordinal for left, _ in consistent),
        intervals_1=tuple(sorted(selected[0], key=lambda c: c.start)),
        intervals_2=tuple(sorted(selected[1], key=lambda c: c.start)),
        blocks=tuple(summaries),
    )
