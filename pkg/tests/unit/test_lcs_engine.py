import numpy as np
import pytest

from src.common.exceptions import ValidationError
from src.lcs.engine import family_lcs, lcs_len, lcs_witness, pairwise_lcs_matrix
from src.words.core import Word, is_subsequence, parse_word
from tests.word_helpers import binary, random_balanced, random_word


def test_lcs_len_small_cases() -> None:
    assert lcs_len(parse_word("1334", 5), parse_word("12341234", 5)) == 4
    assert lcs_len(binary("0011"), binary("1100")) == 2
    assert lcs_len(binary("0101"), binary("0011")) == 3
    assert lcs_len(binary("0110"), binary("0110")) == 4
    assert lcs_len(Word((), 2), binary("0110")) == 0


def test_lcs_len_rejects_mixed_alphabets() -> None:
    with pytest.raises(ValidationError):
        lcs_len(Word((0, 1), 2), Word((0, 1), 3))


def test_lcs_len_is_symmetric_and_bounded() -> None:
    rng = np.random.default_rng(7)
    for _ in range(50):
        u = random_word(rng, int(rng.integers(0, 30)), 3)
        w = random_word(rng, int(rng.integers(0, 30)), 3)
        value = lcs_len(u, w)
        assert value == lcs_len(w, u)
        assert value <= min(len(u), len(w))


def test_balanced_binary_pairs_share_half() -> None:
    rng = np.random.default_rng(11)
    for _ in range(30):
        u, w = random_balanced(rng, 40), random_balanced(rng, 40)
        assert lcs_len(u, w) >= 20


def test_witness_small_cases() -> None:
    witness = lcs_witness(binary("0011"), binary("1100"))
    assert len(witness) == 2
    assert str(witness.common) in {"00", "11"}
    assert witness.is_valid_for(binary("0011"), binary("1100"))

    assert len(lcs_witness(Word((), 2), binary("01"))) == 0
    whole = lcs_witness(binary("0101"), binary("0101"))
    assert whole.idx_a == (0, 1, 2, 3)
    assert whole.common == binary("0101")


@pytest.mark.parametrize("full_table_cells", [1, 16, 2_000_000])
def test_witness_length_matches_lcs_len(full_table_cells: int) -> None:
    rng = np.random.default_rng(3)
    for _ in range(25):
        u = random_word(rng, int(rng.integers(1, 60)), 3)
        w = random_word(rng, int(rng.integers(1, 60)), 3)
        witness = lcs_witness(u, w, full_table_cells=full_table_cells)
        assert len(witness) == lcs_len(u, w)
        assert witness.is_valid_for(u, w)
        assert is_subsequence(witness.common, u)
        assert is_subsequence(witness.common, w)


def test_family_lcs_tie_break_and_edges() -> None:
    family = [binary("0000"), binary("1111"), binary("0101")]
    result = family_lcs(family)
    assert result.length == 2
    assert result.pair == (0, 2)
    assert len(result.witness) == 2

    assert family_lcs([binary("0110"), binary("0110")]).length == 4
    assert family_lcs([binary("0000"), binary("1111")]).length == 0
    with pytest.raises(ValidationError):
        family_lcs([binary("01")])
    with pytest.raises(ValidationError):
        family_lcs([Word((0,), 2), Word((0,), 3)])


def test_pairwise_matrix_is_symmetric_with_lengths_on_diagonal() -> None:
    family = [binary("0011"), binary("1100"), binary("0101")]
    matrix = pairwise_lcs_matrix(family)
    assert matrix == [[4, 2, 3], [2, 4, 2], [3, 2, 4]]
