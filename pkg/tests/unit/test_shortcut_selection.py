import numpy as np
import pytest

from src.common.exceptions import MatcherStageError
from src.lcs.engine import lcs_len
from src.matcher.annotation import annotate_word
from src.matcher.params import MatcherThresholds
from src.matcher.selection import select_pair_and_type
from src.matcher.shortcut import bad_pair_shortcut, best_split_witness
from tests.word_helpers import alternating, binary, random_balanced


def _thresholds(n: int, r: int, deviation: int) -> MatcherThresholds:
    return MatcherThresholds(n=n, r=r, deviation=deviation, block_ones=1, scale=n ** (1 - 1 / r))


def test_right_bad_pair_gives_the_whole_word() -> None:
    thresholds = _thresholds(8, 2, 1)
    family = [annotate_word(binary("11110000"), thresholds) for _ in range(2)]
    result = bad_pair_shortcut(family)
    assert result is not None
    assert result.side == "right-bad"
    assert result.ordinal == 1
    assert str(result.witness.common) == "11110000"
    assert len(result.witness) >= 4 + thresholds.deviation


def test_left_bad_pair() -> None:
    thresholds = _thresholds(8, 2, 1)
    family = [
        annotate_word(binary("01010101"), thresholds),
        annotate_word(binary("00001111"), thresholds),
        annotate_word(binary("00011101"), thresholds),
    ]
    result = bad_pair_shortcut(family)
    assert result is not None
    assert result.side == "left-bad"
    assert result.pair == (1, 2)
    a, b = result.pair
    assert result.witness.is_valid_for(family[a].word, family[b].word)
    assert len(result.witness) >= 4 + thresholds.deviation


def test_no_shortcut_without_a_shared_bad_side() -> None:
    thresholds = _thresholds(8, 2, 3)
    family = [annotate_word(binary(text), thresholds) for text in ("00001111", "11110000")]
    assert bad_pair_shortcut(family) is None

    good_only = [annotate_word(alternating(8), _thresholds(8, 2, 1)) for _ in range(3)]
    assert bad_pair_shortcut(good_only) is None


def test_split_witness_beats_half_on_three_words() -> None:
    rng = np.random.default_rng(5)
    thresholds = _thresholds(8, 1, 1)
    for _ in range(40):
        words = [random_balanced(rng, 8) for _ in range(3)]
        result = best_split_witness([annotate_word(w, thresholds) for w in words])
        a, b = result.pair
        assert result.witness.is_valid_for(words[a], words[b])
        assert 5 <= len(result.witness) <= lcs_len(words[a], words[b])


def test_selection_on_identical_words() -> None:
    thresholds = MatcherThresholds(n=16, r=2, deviation=1, block_ones=1, scale=4.0)
    family = [annotate_word(alternating(16), thresholds) for _ in range(4)]
    selection = select_pair_and_type(family, 2)
    assert (selection.i1, selection.i2, selection.t) == (0, 1, 0)
    assert selection.ordinals == tuple(range(1, 9))


def test_selection_prefers_largest_set_then_smallest_pair() -> None:
    thresholds = _thresholds(16, 3, 2)
    runs = binary("1100001111000011")
    family = [annotate_word(w, thresholds) for w in (runs, runs, alternating(16), alternating(16))]
    assert family[0].types.tolist() == [1] * 8
    selection = select_pair_and_type(family, 3)
    assert (selection.i1, selection.i2, selection.t) == (0, 1, 1)
    assert len(selection.ordinals) == 8


def test_selection_without_types_signals_a_stage_failure() -> None:
    thresholds = _thresholds(8, 1, 1)
    family = [annotate_word(alternating(8), thresholds) for _ in range(3)]
    with pytest.raises(MatcherStageError):
        select_pair_and_type(family, 1)
