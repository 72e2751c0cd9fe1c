from __future__ import annotations

from pathlib import Path

import numpy as np

from src.words.core import Word, parse_word
from src.words.word_file import write_word_file


def random_word(rng: np.random.Generator, n: int, k: int) -> Word:
    return Word.of(rng.integers(0, k, size=n).tolist(), k)


def random_balanced(rng: np.random.Generator, n: int, k: int = 2) -> Word:
    symbols = np.repeat(np.arange(k), n // k)
    return Word.of(rng.permutation(symbols).tolist(), k)


def binary(text: str) -> Word:
    return parse_word(text, 2)


def alternating(n: int) -> Word:
    """(01)^(n/2)."""
    return Word.of([i % 2 for i in range(n)], 2)


def write_family(path: Path, words: list[Word], **header: object) -> Path:
    write_word_file(path, words, dict(header) or None)
    return path
