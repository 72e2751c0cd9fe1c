from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..words.core import SubsequenceWitness, Word
from .matching import NonCrossingMatching
from .shift import ClosePairGraph


@dataclass(frozen=True)
class DottedWord:
    """A word with some leading ones removed; ``kept[i]`` is the original index of symbol i."""

    word: Word
    kept: np.ndarray


@dataclass(frozen=True)
class Assembly:
    witness: SubsequenceWitness
    assembled_length: int | None
    used_baseline: bool


def drop_leading_ones(w: Word, count: int) -> DottedWord:
    symbols = np.asarray(w.symbols, dtype=np.int64)
    ones = np.flatnonzero(symbols == 1)
    keep = np.ones(len(symbols), dtype=bool)
    keep[ones[:count]] = False
    kept = np.flatnonzero(keep)
    return DottedWord(word=Word(tuple(symbols[kept].tolist()), w.alphabet_size), kept=kept)


def zeros_witness(a: Word, b: Word) -> SubsequenceWitness:
    """All zeros of two balanced binary words of equal length."""
    idx_a = np.flatnonzero(np.asarray(a.symbols) == 0)
    idx_b = np.flatnonzero(np.asarray(b.symbols) == 0)
    take = min(len(idx_a), len(idx_b))
    return SubsequenceWitness(
        Word((0,) * take, 2), tuple(idx_a[:take].tolist()), tuple(idx_b[:take].tolist())
    )


def _take_common(
    symbol: int,
    indices_a: np.ndarray,
    span_a: tuple[int, int],
    indices_b: np.ndarray,
    span_b: tuple[int, int],
) -> tuple[np.ndarray, np.ndarray]:
    """First min(count) occurrences of ``symbol`` inside half-open spans of both words."""
    a = indices_a[np.searchsorted(indices_a, span_a[0]) : np.searchsorted(indices_a, span_a[1])]
    b = indices_b[np.searchsorted(indices_b, span_b[0]) : np.searchsorted(indices_b, span_b[1])]
    take = min(len(a), len(b))
    return a[:take], b[:take]


def assemble_witness(
    matching: NonCrossingMatching,
    graph: ClosePairGraph,
    a: Word,
    b: Word,
) -> Assembly:
    """Zeros of matched interval pairs interleaved with ones from the gaps between them.

    The word on the side of the shift loses its first |Q| ones before
    assembly; indices are mapped back to the original words. The result is
    never shorter than the all-zeros common subsequence.
    """
    baseline = zeros_witness(a, b)
    if not matching.pairs:
        return Assembly(witness=baseline, assembled_length=None, used_baseline=True)

    q = graph.q
    dotted_a = drop_leading_ones(a, -q if q < 0 else 0)
    dotted_b = drop_leading_ones(b, q if q > 0 else 0)
    sym_a = np.asarray(dotted_a.word.symbols, dtype=np.int64)
    sym_b = np.asarray(dotted_b.word.symbols, dtype=np.int64)
    zeros_a, ones_a = np.flatnonzero(sym_a == 0), np.flatnonzero(sym_a == 1)
    zeros_b, ones_b = np.flatnonzero(sym_b == 0), np.flatnonzero(sym_b == 1)

    def local(dotted: DottedWord, index: int) -> int:
        return int(np.searchsorted(dotted.kept, index))

    pieces_a: list[np.ndarray] = []
    pieces_b: list[np.ndarray] = []
    common: list[int] = []
    gap_a, gap_b = 0, 0
    for i, j in matching.pairs:
        left, right = graph.left[i], graph.right[j]
        start_a, end_a = local(dotted_a, left.start), local(dotted_a, left.end) + 1
        start_b, end_b = local(dotted_b, right.start), local(dotted_b, right.end) + 1
        for symbol, ia, ib, sa, sb in (
            (1, ones_a, ones_b, (gap_a, start_a), (gap_b, start_b)),
            (0, zeros_a, zeros_b, (start_a, end_a), (start_b, end_b)),
        ):
            taken_a, taken_b = _take_common(symbol, ia, sa, ib, sb)
            pieces_a.append(taken_a)
            pieces_b.append(taken_b)
            common.extend([symbol] * len(taken_a))
        gap_a, gap_b = end_a, end_b
    taken_a, taken_b = _take_common(1, ones_a, (gap_a, len(sym_a)), ones_b, (gap_b, len(sym_b)))
    pieces_a.append(taken_a)
    pieces_b.append(taken_b)
    common.extend([1] * len(taken_a))

    idx_a = dotted_a.kept[np.concatenate(pieces_a)]
    idx_b = dotted_b.kept[np.concatenate(pieces_b)]
    witness = SubsequenceWitness(
        Word(tuple(common), 2), tuple(idx_a.tolist()), tuple(idx_b.tolist())
    )
    if len(witness.common) < len(baseline.common):
        return Assembly(witness=baseline, assembled_length=len(witness.common), used_baseline=True)
    return Assembly(witness=witness, assembled_length=len(witness.common), used_baseline=False)
