import pytest

from src.matcher.annotation import annotate_word
from src.matcher.intervals import choose_rich_intervals, greedy_disjoint, partition_blocks
from src.matcher.params import MatcherThresholds
from src.matcher.selection import PairSelection, select_pair_and_type
from src.words.core import Word
from tests.word_helpers import alternating, binary

RUNS = "1100001111000011"


def _thresholds(block_ones: int, deviation: int = 2) -> MatcherThresholds:
    return MatcherThresholds(n=16, r=2, deviation=deviation, block_ones=block_ones, scale=4.0)


def _blocks_as_text(w: Word, block_ones: int) -> list[str]:
    partition = partition_blocks(w, block_ones)
    return [str(Word(w.symbols[a:b], 2)) for a, b in partition.blocks]


def test_partition_blocks() -> None:
    assert _blocks_as_text(binary("01010101"), 2) == ["01010", "101"]
    assert _blocks_as_text(binary("11110000"), 2) == ["11", "110000"]
    assert _blocks_as_text(binary("01010101"), 4) == ["01010101"]
    partition = partition_blocks(binary(RUNS), 2)
    assert partition.boundaries == (6, 8, 14)
    assert [partition.block_of(i) for i in (0, 5, 6, 7, 8, 15)] == [0, 0, 1, 1, 2, 3]
    with pytest.raises(ValueError):
        partition_blocks(binary("01"), 0)


def test_greedy_disjoint_covers_a_third_of_covered_points() -> None:
    spans = [(1, 3), (0, 4), (2, 6)]
    chosen = greedy_disjoint(spans)
    assert chosen == [0]
    covered = {p for a, b in spans for p in range(a, b + 1)}
    kept = {p for i in chosen for p in range(spans[i][0], spans[i][1] + 1)}
    assert 3 * len(kept) >= len(covered)

    assert greedy_disjoint([(0, 4), (2, 6), (5, 9)]) == [0, 2]
    assert greedy_disjoint([]) == []


def test_type_zero_intervals_are_single_zeros() -> None:
    thresholds = _thresholds(block_ones=8, deviation=1)
    w = alternating(16)
    annotated = [annotate_word(w, thresholds) for _ in range(4)]
    selection = select_pair_and_type(annotated, 2)
    families = choose_rich_intervals(
        annotated[0],
        annotated[1],
        selection,
        partition_blocks(w, 8),
        partition_blocks(w, 8),
        thresholds,
    )
    assert families.consistent_ordinals == tuple(range(1, 9))
    assert [i.start for i in families.intervals_1] == list(range(0, 16, 2))
    assert all(i.start == i.end for i in families.intervals_1 + families.intervals_2)
    assert [i.lp for i in families.intervals_2] == list(range(8))
    assert len(families.blocks) == 1
    assert families.blocks[0].coverage_1 == 1.0
    assert families.per_block_counts() == {0: (8, 8)}


def test_type_one_intervals_respect_their_counts() -> None:
    thresholds = _thresholds(block_ones=2)
    w = binary(RUNS)
    annotated = annotate_word(w, thresholds)
    selection = PairSelection(i1=0, i2=1, t=1, ordinals=tuple(range(1, 9)))
    partition = partition_blocks(w, 2)
    families = choose_rich_intervals(
        annotated, annotated, selection, partition, partition, thresholds
    )

    assert [(i.start, i.end) for i in families.intervals_1] == [(2, 5), (10, 13)]
    for interval in families.intervals_1 + families.intervals_2:
        assert interval.good_zero_count == thresholds.rich_length(1)
        assert interval.ones_count <= thresholds.rich_max_ones(1)
        assert interval.zero_count == 4
        assert interval.lp == interval.rp
    assert [b.block for b in families.blocks] == [0, 2]
    assert all(b.consistent == 4 for b in families.blocks)
    assert all(b.coverage_1 == b.coverage_2 == 1.0 for b in families.blocks)
