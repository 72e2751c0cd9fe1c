"""Per-zero bookkeeping for balanced binary words: positions, goodness and types."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal, Sequence

import numpy as np

from ..common.exceptions import ValidationError
from ..words.core import Word, is_balanced
from .params import MatcherThresholds

ZeroClass = Literal["good", "left-bad", "right-bad"]

# type codes used in numpy arrays; good zeros carry their type t >= 0
LEFT_BAD = -1
RIGHT_BAD = -2
UNTYPED = -3


@dataclass(frozen=True)
class ZeroAnnotation:
    ordinal: int
    index: int
    position: int
    expected: int
    deviation: int
    zero_class: ZeroClass
    zero_type: int | str | None = None

    @property
    def is_good(self) -> bool:
        return self.zero_class == "good"


@dataclass(frozen=True, eq=False)
class AnnotatedWord:
    """A word with its zero annotations mirrored into numpy arrays."""

    word: Word
    annotations: tuple[ZeroAnnotation, ...]
    zero_indices: np.ndarray
    positions: np.ndarray
    types: np.ndarray

    @property
    def good_mask(self) -> np.ndarray:
        return self.types >= 0

    def type_of(self, ordinal: int) -> int:
        return int(self.types[ordinal - 1])


def require_balanced_binary(w: Word) -> None:
    if w.alphabet_size != 2:
        raise ValidationError(f"expected a binary word, got alphabet size {w.alphabet_size}")
    if not is_balanced(w):
        raise ValidationError(f"word of length {len(w)} is not balanced")


def annotate_zeros(w: Word, thresholds: MatcherThresholds) -> list[ZeroAnnotation]:
    require_balanced_binary(w)
    limit = thresholds.deviation
    annotations: list[ZeroAnnotation] = []
    ones = 0
    ordinal = 0
    for index, symbol in enumerate(w.symbols):
        if symbol == 1:
            ones += 1
            continue
        ordinal += 1
        deviation = ones - ordinal
        zero_class: ZeroClass
        if deviation < -limit:
            zero_class = "left-bad"
        elif deviation > limit:
            zero_class = "right-bad"
        else:
            zero_class = "good"
        annotations.append(
            ZeroAnnotation(
                ordinal=ordinal,
                index=index,
                position=ones,
                expected=ordinal,
                deviation=deviation,
                zero_class=zero_class,
                zero_type=None if zero_class == "good" else zero_class,
            )
        )
    return annotations


def rich_window_starts(good_positions: np.ndarray, length: int, max_ones: int) -> np.ndarray:
    """Starts ``a`` (in good-zero order) of 0-rich windows of ``length`` good zeros.

    The window spans good zeros a..a+length-1; the ones inside it are the
    difference of the outer positions.
    """
    count = len(good_positions)
    if length > count or length < 1:
        return np.empty(0, dtype=np.int64)
    spread = good_positions[length - 1 :] - good_positions[: count - length + 1]
    return np.flatnonzero(spread <= max_ones)


def _covered_by_windows(starts: np.ndarray, length: int, count: int) -> np.ndarray:
    marks = np.zeros(count + 1, dtype=np.int64)
    np.add.at(marks, starts, 1)
    np.add.at(marks, starts + length, -1)
    return np.cumsum(marks[:count]) > 0


def compute_types(
    w: Word,
    annotations: Sequence[ZeroAnnotation],
    thresholds: MatcherThresholds,
) -> list[ZeroAnnotation]:
    """Assign each good zero the largest t whose 0-rich window can contain it."""
    good = [a for a in annotations if a.is_good]
    good_positions = np.asarray([a.position for a in good], dtype=np.int64)
    best = np.zeros(len(good), dtype=np.int64)
    for t in range(1, thresholds.r):
        length = thresholds.rich_length(t)
        starts = rich_window_starts(good_positions, length, thresholds.rich_max_ones(t))
        if len(starts) == 0:
            continue
        best[_covered_by_windows(starts, length, len(good))] = t

    typed = iter(best.tolist())
    return [replace(a, zero_type=next(typed)) if a.is_good else a for a in annotations]


def annotate_word(w: Word, thresholds: MatcherThresholds) -> AnnotatedWord:
    annotations = compute_types(w, annotate_zeros(w, thresholds), thresholds)
    codes = {"left-bad": LEFT_BAD, "right-bad": RIGHT_BAD}
    types = np.asarray(
        [
            a.zero_type if isinstance(a.zero_type, int) else codes.get(str(a.zero_type), UNTYPED)
            for a in annotations
        ],
        dtype=np.int64,
    )
    return AnnotatedWord(
        word=w,
        annotations=tuple(annotations),
        zero_indices=np.asarray([a.index for a in annotations], dtype=np.int64),
        positions=np.asarray([a.position for a in annotations], dtype=np.int64),
        types=types,
    )
