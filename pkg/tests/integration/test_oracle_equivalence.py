from itertools import combinations_with_replacement, product

import numpy as np

from src.lcs.engine import lcs_len, lcs_witness
from src.oracle.reference import lcs_reference
from src.words.core import Word
from tests.word_helpers import random_word


def _all_binary_words(max_length: int) -> list[Word]:
    return [
        Word(symbols, 2)
        for n in range(max_length + 1)
        for symbols in product(range(2), repeat=n)
    ]


def test_engine_matches_reference_on_short_binary_words() -> None:
    words = _all_binary_words(6)
    for u, w in combinations_with_replacement(words, 2):
        assert lcs_len(u, w) == lcs_reference(u, w)


def test_engine_matches_reference_on_length_eight() -> None:
    words = [Word(symbols, 2) for symbols in product(range(2), repeat=8)]
    for u, w in combinations_with_replacement(words, 2):
        assert lcs_len(u, w) == lcs_reference(u, w)


def test_engine_matches_reference_on_random_pairs() -> None:
    rng = np.random.default_rng(20240601)
    for _ in range(1000):
        k = int(rng.integers(1, 5))
        u = random_word(rng, int(rng.integers(0, 65)), k)
        w = random_word(rng, int(rng.integers(0, 65)), k)
        expected = lcs_reference(u, w)
        assert lcs_len(u, w) == expected
        witness = lcs_witness(u, w, full_table_cells=1024)
        assert len(witness) == expected
        assert witness.is_valid_for(u, w)
