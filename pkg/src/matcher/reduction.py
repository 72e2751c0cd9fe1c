"""Reduce an arbitrary family to balanced binary words the matcher accepts.

A common subsequence of projected words is a common subsequence of the
originals, so any witness found after reduction maps back (through
``ReducedFamily.source_indices``) to a witness for the input family.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

from ..common.exceptions import ValidationError
from ..words.core import Word, is_balanced, letter_counts

ReductionMode = Literal["identity", "projection", "balanced-core+projection"]


@dataclass(frozen=True)
class ReducedFamily:
    words: tuple[Word, ...]
    mode: ReductionMode
    letters: tuple[int, int]
    source_indices: tuple[tuple[int, ...], ...]

    def lift_indices(self, word: int, indices: Sequence[int]) -> tuple[int, ...]:
        source = self.source_indices[word]
        return tuple(source[i] for i in indices)


def balanced_core(w: Word, target: int | None = None) -> tuple[Word, tuple[int, ...]]:
    """Delete surplus occurrences, rightmost first, until each letter occurs ``target`` times.

    ``target`` defaults to the smallest letter count. Returns the core and the
    indices of the kept symbols.
    """
    counts = letter_counts(w)
    goal = min(counts) if target is None else target
    if goal > min(counts):
        raise ValidationError(f"cannot keep {goal} of each letter; rarest count is {min(counts)}")
    seen = [0] * w.alphabet_size
    kept: list[int] = []
    for index, symbol in enumerate(w.symbols):
        if seen[symbol] < goal:
            seen[symbol] += 1
            kept.append(index)
    return Word(tuple(w.symbols[i] for i in kept), w.alphabet_size), tuple(kept)


def _pick_letters(family: Sequence[Word]) -> tuple[int, int]:
    k = family[0].alphabet_size
    counts = [letter_counts(w) for w in family]

    def score(pair: tuple[int, int]) -> int:
        a, b = pair
        return min(min(c[a], c[b]) for c in counts)

    return max(combinations(range(k), 2), key=lambda pair: (score(pair), -pair[0], -pair[1]))


def reduce_family_to_binary(family: Sequence[Word]) -> ReducedFamily:
    if len(family) < 2:
        raise ValidationError("need at least two words")
    k = family[0].alphabet_size
    if any(w.alphabet_size != k for w in family):
        raise ValidationError("family words use different alphabets")
    if k < 2:
        raise ValidationError("alphabet must have at least two letters")

    lengths = {len(w) for w in family}
    if k == 2 and len(lengths) == 1 and all(is_balanced(w) for w in family):
        return ReducedFamily(
            words=tuple(family),
            mode="identity",
            letters=(0, 1),
            source_indices=tuple(tuple(range(len(w))) for w in family),
        )

    a, b = _pick_letters(family)
    relabel = {a: 0, b: 1}
    projected: list[tuple[Word, tuple[int, ...]]] = []
    for w in family:
        indices = tuple(i for i, symbol in enumerate(w.symbols) if symbol in relabel)
        projected.append((Word(tuple(relabel[w.symbols[i]] for i in indices), 2), indices))

    if len({len(p) for p, _ in projected}) == 1 and all(is_balanced(p) for p, _ in projected):
        return ReducedFamily(
            words=tuple(p for p, _ in projected),
            mode="projection",
            letters=(a, b),
            source_indices=tuple(indices for _, indices in projected),
        )

    target = min(min(letter_counts(p)) for p, _ in projected)
    if target == 0:
        raise ValidationError(f"letters {a} and {b} do not both occur in every word")
    words: list[Word] = []
    sources: list[tuple[int, ...]] = []
    for p, indices in projected:
        core, kept = balanced_core(p, target)
        words.append(core)
        sources.append(tuple(indices[i] for i in kept))
    return ReducedFamily(
        words=tuple(words),
        mode="balanced-core+projection",
        letters=(a, b),
        source_indices=tuple(sources),
    )
