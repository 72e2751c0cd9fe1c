from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator, Sequence

from ..common.exceptions import ValidationError

# Alphabets up to this size serialize as contiguous digits; larger ones use commas.
DIGIT_ALPHABET_LIMIT = 10


@dataclass(frozen=True)
class Word:
    """A finite word over the alphabet {0, ..., alphabet_size - 1}.

    Occurrences are identified by their index in ``symbols``.
    """

    symbols: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if isinstance(self.alphabet_size, bool) or not isinstance(self.alphabet_size, int):
            raise ValidationError("alphabet_size must be an integer")
        if self.alphabet_size < 1:
            raise ValidationError(f"alphabet_size must be >= 1, got {self.alphabet_size}")
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.symbols:
            low, high = min(self.symbols), max(self.symbols)
            if low < 0 or high >= self.alphabet_size:
                bad = low if low < 0 else high
                raise ValidationError(
                    f"symbol {bad} out of range for alphabet of size {self.alphabet_size}"
                )

    @classmethod
    def of(cls, symbols: Iterable[int], alphabet_size: int) -> Word:
        return cls(tuple(int(symbol) for symbol in symbols), alphabet_size)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index: int) -> int:
        return self.symbols[index]

    def __str__(self) -> str:
        return serialize_word(self)


@dataclass(frozen=True)
class SubsequenceWitness:
    """A common subsequence of words A and B together with the indices realizing it."""

    common: Word
    idx_a: tuple[int, ...]
    idx_b: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (len(self.common) == len(self.idx_a) == len(self.idx_b)):
            raise ValidationError(
                "witness index lists must match the common subsequence length: "
                f"{len(self.common)}, {len(self.idx_a)}, {len(self.idx_b)}"
            )
        for label, indices in (("idx_a", self.idx_a), ("idx_b", self.idx_b)):
            if any(left >= right for left, right in zip(indices, indices[1:])):
                raise ValidationError(f"{label} must be strictly increasing")

    def __len__(self) -> int:
        return len(self.common)

    @classmethod
    def empty(cls, alphabet_size: int) -> SubsequenceWitness:
        return cls(Word((), alphabet_size), (), ())

    def is_valid_for(self, a: Word, b: Word) -> bool:
        for symbol, i, j in zip(self.common, self.idx_a, self.idx_b):
            if not (0 <= i < len(a) and 0 <= j < len(b)):
                return False
            if a[i] != symbol or b[j] != symbol:
                return False
        return True

    def validate_against(self, a: Word, b: Word) -> None:
        if not self.is_valid_for(a, b):
            raise ValidationError("witness does not embed into both words")


def parse_word(text: str, alphabet_size: int) -> Word:
    if isinstance(alphabet_size, bool) or not isinstance(alphabet_size, int) or alphabet_size < 1:
        raise ValidationError(f"alphabet_size must be an integer >= 1, got {alphabet_size!r}")
    body = text.strip()
    if not body:
        return Word((), alphabet_size)

    if alphabet_size > DIGIT_ALPHABET_LIMIT or "," in body:
        tokens = [token.strip() for token in body.split(",")]
    else:
        tokens = list(body)

    symbols: list[int] = []
    for token in tokens:
        if not token.isdigit() or not token.isascii():
            raise ValidationError(f"malformed word text {text!r}: bad token {token!r}")
        symbols.append(int(token))
    return Word(tuple(symbols), alphabet_size)


def serialize_word(w: Word) -> str:
    if w.alphabet_size > DIGIT_ALPHABET_LIMIT:
        return ",".join(str(symbol) for symbol in w.symbols)
    return "".join(str(symbol) for symbol in w.symbols)


def _require_same_alphabet(u: Word, w: Word) -> None:
    if u.alphabet_size != w.alphabet_size:
        raise ValidationError(
            f"alphabet sizes differ: {u.alphabet_size} != {w.alphabet_size}"
        )


def is_subsequence(u: Word, w: Word) -> bool:
    _require_same_alphabet(u, w)
    remaining = iter(w.symbols)
    return all(symbol in remaining for symbol in u.symbols)


def letter_counts(w: Word) -> list[int]:
    counts = Counter(w.symbols)
    return [counts.get(symbol, 0) for symbol in range(w.alphabet_size)]


def most_frequent_letter(w: Word) -> int:
    counts = letter_counts(w)
    return max(range(w.alphabet_size), key=lambda symbol: (counts[symbol], -symbol))


def is_balanced(w: Word) -> bool:
    n, k = len(w), w.alphabet_size
    if n % k:
        return False
    return all(count == n // k for count in letter_counts(w))


def reverse(w: Word) -> Word:
    return Word(w.symbols[::-1], w.alphabet_size)


def power(w: Word, m: int) -> Word:
    if m < 0:
        raise ValidationError(f"power exponent must be >= 0, got {m}")
    return Word(w.symbols * m, w.alphabet_size)


def concat(words: Sequence[Word]) -> Word:
    if not words:
        raise ValidationError("concat needs at least one word")
    k = words[0].alphabet_size
    for w in words:
        _require_same_alphabet(words[0], w)
    return Word(tuple(symbol for w in words for symbol in w.symbols), k)


def constant_word(symbol: int, n: int, alphabet_size: int) -> Word:
    return Word((symbol,) * n, alphabet_size)


def project(w: Word, keep: set[int] | frozenset[int]) -> Word:
    outside = [symbol for symbol in keep if not 0 <= symbol < w.alphabet_size]
    if outside:
        raise ValidationError(f"projection letters {sorted(outside)} outside the alphabet")
    return Word(tuple(symbol for symbol in w.symbols if symbol in keep), w.alphabet_size)


def run_lengths(w: Word) -> list[tuple[int, int]]:
    """Maximal runs of ``w`` as (symbol, length) pairs."""
    return [(symbol, sum(1 for _ in group)) for symbol, group in groupby(w.symbols)]
