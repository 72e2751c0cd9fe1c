from src.matcher.annotation import annotate_word
from src.matcher.assembly import assemble_witness, drop_leading_ones, zeros_witness
from src.matcher.intervals import choose_rich_intervals, partition_blocks
from src.matcher.matching import NonCrossingMatching, noncrossing_matching
from src.matcher.params import MatcherThresholds
from src.matcher.selection import PairSelection, select_pair_and_type
from src.matcher.shift import best_shift, close_pair_graph
from tests.word_helpers import alternating, binary


def test_drop_leading_ones_keeps_an_index_map() -> None:
    dotted = drop_leading_ones(binary("1101"), 2)
    assert str(dotted.word) == "01"
    assert dotted.kept.tolist() == [2, 3]
    untouched = drop_leading_ones(binary("0110"), 0)
    assert untouched.kept.tolist() == [0, 1, 2, 3]


def test_zeros_witness_is_half_the_word() -> None:
    witness = zeros_witness(binary("0110"), binary("1001"))
    assert str(witness.common) == "00"
    assert witness.idx_a == (0, 3)
    assert witness.idx_b == (1, 2)


def test_identical_words_assemble_to_the_whole_word() -> None:
    thresholds = MatcherThresholds(n=16, r=2, deviation=1, block_ones=1, scale=4.0)
    w = alternating(16)
    annotated = [annotate_word(w, thresholds) for _ in range(4)]
    selection = select_pair_and_type(annotated, 2)
    partition = partition_blocks(w, thresholds.block_ones)
    families = choose_rich_intervals(
        annotated[0], annotated[1], selection, partition, partition, thresholds
    )
    shift = best_shift(families, thresholds)
    assert shift.q == 0
    matching = noncrossing_matching(shift.graph)
    assert matching.size == 8

    assembly = assemble_witness(matching, shift.graph, w, w)
    assert not assembly.used_baseline
    assert assembly.assembled_length == 16
    assert assembly.witness.common == w
    assert assembly.witness.idx_a == tuple(range(16))


def test_empty_matching_falls_back_to_zeros() -> None:
    thresholds = MatcherThresholds(n=8, r=2, deviation=1, block_ones=1, scale=8**0.5)
    a, b = binary("01010101"), binary("10101010")
    graph = close_pair_graph([], [], 0, 0, thresholds)
    empty = NonCrossingMatching(pairs=(), max_degree=0, edge_count=0, uncrossings=0, dropped=0)
    assembly = assemble_witness(empty, graph, a, b)
    assert assembly.used_baseline
    assert assembly.assembled_length is None
    assert str(assembly.witness.common) == "0000"
    assert assembly.witness.is_valid_for(a, b)


def test_shifted_assembly_maps_back_to_original_indices() -> None:
    thresholds = MatcherThresholds(n=8, r=2, deviation=2, block_ones=3, scale=8**0.5)
    a, b = binary("01010101"), binary("10101010")
    annotated = [annotate_word(w, thresholds) for w in (a, b)]
    positions_a = annotated[0].positions.tolist()
    positions_b = annotated[1].positions.tolist()
    assert positions_a == [0, 1, 2, 3]
    assert positions_b == [1, 2, 3, 4]

    selection = PairSelection(i1=0, i2=1, t=0, ordinals=(1, 2, 3, 4))
    families = choose_rich_intervals(
        annotated[0],
        annotated[1],
        selection,
        partition_blocks(a, 8),
        partition_blocks(b, 8),
        thresholds,
    )
    shift = best_shift(families, thresholds)
    assert shift.q == 1
    matching = noncrossing_matching(shift.graph)
    assembly = assemble_witness(matching, shift.graph, a, b)
    assert assembly.witness.is_valid_for(a, b)
    assert len(assembly.witness) == 7
