from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from ..words.core import SubsequenceWitness, Word
from .annotation import LEFT_BAD, RIGHT_BAD, AnnotatedWord


@dataclass(frozen=True)
class ShortcutResult:
    pair: tuple[int, int]
    ordinal: int
    side: Literal["left-bad", "right-bad"]
    witness: SubsequenceWitness


def _ones_indices(w: Word) -> np.ndarray:
    return np.flatnonzero(np.asarray(w.symbols, dtype=np.int8) == 1)


def _left_bad_witness(a: AnnotatedWord, b: AnnotatedWord, j: int) -> SubsequenceWitness:
    """0^j, then the ones to the right of the j'th zero of both words."""
    half = len(a.positions)
    take = min(half - int(a.positions[j - 1]), half - int(b.positions[j - 1]))
    idx_a: list[int] = a.zero_indices[:j].tolist()
    idx_b: list[int] = b.zero_indices[:j].tolist()
    for annotated, indices in ((a, idx_a), (b, idx_b)):
        ones = _ones_indices(annotated.word)
        after = ones[ones > annotated.zero_indices[j - 1]]
        indices.extend(after[:take].tolist())
    common = Word((0,) * j + (1,) * take, 2)
    return SubsequenceWitness(common, tuple(idx_a), tuple(idx_b))


def _right_bad_witness(a: AnnotatedWord, b: AnnotatedWord, j: int) -> SubsequenceWitness:
    """The ones to the left of the j'th zero of both words, then zeros j, j+1, ..."""
    half = len(a.positions)
    take = min(int(a.positions[j - 1]), int(b.positions[j - 1]))
    idx_a = _ones_indices(a.word)[:take].tolist() + a.zero_indices[j - 1 :].tolist()
    idx_b = _ones_indices(b.word)[:take].tolist() + b.zero_indices[j - 1 :].tolist()
    common = Word((1,) * take + (0,) * (half - j + 1), 2)
    return SubsequenceWitness(common, tuple(idx_a), tuple(idx_b))


def bad_pair_shortcut(family: Sequence[AnnotatedWord]) -> ShortcutResult | None:
    """Longest witness from an ordinal whose zeros are bad on the same side in two words."""
    if len(family) < 2:
        return None
    types = np.vstack([annotated.types for annotated in family])
    positions = np.vstack([annotated.positions for annotated in family])
    half = types.shape[1]
    best: tuple[int, int, int, int] | None = None
    best_side = "left-bad"

    for code, side in ((LEFT_BAD, "left-bad"), (RIGHT_BAD, "right-bad")):
        hits = types == code
        for column in np.flatnonzero(hits.sum(axis=0) >= 2).tolist():
            rows = np.flatnonzero(hits[:, column])
            column_positions = positions[rows, column]
            # keep the two rows giving the longest witness for this ordinal
            order = np.argsort(column_positions if side == "left-bad" else -column_positions,
                               kind="stable")
            first, second = sorted(int(rows[i]) for i in order[:2])
            j = column + 1
            if side == "left-bad":
                length = j + half - int(max(positions[first, column], positions[second, column]))
            else:
                nearest = int(min(positions[first, column], positions[second, column]))
                length = nearest + half - j + 1
            # longest first, then smallest pair and ordinal
            rank = (length, -first, -second, -j)
            if best is None or rank > best:
                best, best_side = rank, side

    if best is None:
        return None
    first, second, j = -best[1], -best[2], -best[3]
    a, b = family[first], family[second]
    if best_side == "left-bad":
        return ShortcutResult((first, second), j, "left-bad", _left_bad_witness(a, b, j))
    return ShortcutResult((first, second), j, "right-bad", _right_bad_witness(a, b, j))


def best_split_witness(family: Sequence[AnnotatedWord]) -> ShortcutResult:
    """Best witness of either shortcut shape over every pair and every ordinal, bad or not.

    Among three words two always agree on whether their first zero is preceded
    by a one, so for three or more words the result has length at least n/2 + 1.
    """
    if len(family) < 2:
        raise ValueError("need at least two annotated words")
    half = len(family[0].positions)
    if half == 0:
        empty = SubsequenceWitness.empty(2)
        return ShortcutResult((0, 1), 0, "left-bad", empty)
    ordinals = np.arange(1, half + 1)
    best: tuple[int, int, int, int] | None = None
    best_side = "left-bad"
    for first in range(len(family)):
        for second in range(first + 1, len(family)):
            pa, pb = family[first].positions, family[second].positions
            for side, lengths in (
                ("left-bad", ordinals + half - np.maximum(pa, pb)),
                ("right-bad", np.minimum(pa, pb) + half - ordinals + 1),
            ):
                column = int(np.argmax(lengths))
                rank = (int(lengths[column]), -first, -second, -(column + 1))
                if best is None or rank > best:
                    best, best_side = rank, side
    assert best is not None
    first, second, j = -best[1], -best[2], -best[3]
    a, b = family[first], family[second]
    if best_side == "left-bad":
        return ShortcutResult((first, second), j, "left-bad", _left_bad_witness(a, b, j))
    return ShortcutResult((first, second), j, "right-bad", _right_bad_witness(a, b, j))
