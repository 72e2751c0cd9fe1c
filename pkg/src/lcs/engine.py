"""Exact longest common subsequence computation.

Rows of the DP table are computed with numpy: for a fixed symbol ``x`` of the
row word, ``row[j] = max(prev[j], row[j - 1], prev[j - 1] + [x == b[j - 1]])``
is a running maximum of ``max(prev[j], prev[j - 1] + match[j])``, so each row
is a handful of vector operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from ..common.exceptions import ValidationError
from ..words.core import SubsequenceWitness, Word

DEFAULT_FULL_TABLE_CELLS = 2_000_000


@dataclass(frozen=True)
class FamilyLcsResult:
    length: int
    pair: tuple[int, int]
    witness: SubsequenceWitness


def _as_array(symbols: Sequence[int]) -> np.ndarray:
    return np.asarray(symbols, dtype=np.int64)


def _match_rows(columns: np.ndarray, alphabet_size: int) -> list[np.ndarray]:
    return [(columns == symbol).astype(np.int32) for symbol in range(alphabet_size)]


def _last_row(rows: np.ndarray, columns: np.ndarray, alphabet_size: int) -> np.ndarray:
    """Final DP row of ``rows`` against ``columns`` (length len(columns) + 1)."""
    prev = np.zeros(len(columns) + 1, dtype=np.int32)
    if len(columns) == 0:
        return prev
    matches = _match_rows(columns, alphabet_size)
    tmp = np.empty_like(prev)
    for symbol in rows:
        tmp[0] = 0
        np.maximum(prev[1:], prev[:-1] + matches[symbol], out=tmp[1:])
        np.maximum.accumulate(tmp, out=prev)
    return prev


def _require_same_alphabet(u: Word, w: Word) -> None:
    if u.alphabet_size != w.alphabet_size:
        raise ValidationError(
            f"alphabet sizes differ: {u.alphabet_size} != {w.alphabet_size}"
        )


def lcs_len(u: Word, w: Word) -> int:
    _require_same_alphabet(u, w)
    if not u.symbols or not w.symbols:
        return 0
    longer, shorter = (u, w) if len(u) >= len(w) else (w, u)
    row = _last_row(_as_array(longer.symbols), _as_array(shorter.symbols), u.alphabet_size)
    return int(row[-1])


def _full_table_pairs(
    a: np.ndarray,
    b: np.ndarray,
    alphabet_size: int,
) -> list[tuple[int, int]]:
    m, n = len(a), len(b)
    table = np.zeros((m + 1, n + 1), dtype=np.int32)
    matches = _match_rows(b, alphabet_size)
    tmp = np.empty(n + 1, dtype=np.int32)
    for i in range(1, m + 1):
        prev = table[i - 1]
        tmp[0] = 0
        np.maximum(prev[1:], prev[:-1] + matches[a[i - 1]], out=tmp[1:])
        np.maximum.accumulate(tmp, out=table[i])

    grid = table.tolist()
    a_list, b_list = a.tolist(), b.tolist()
    pairs: list[tuple[int, int]] = []
    i, j = m, n
    while i > 0 and j > 0:
        here = grid[i][j]
        if grid[i - 1][j] == here:
            i -= 1
        elif grid[i][j - 1] == here:
            j -= 1
        else:
            # here == grid[i-1][j-1] + 1 and a[i-1] == b[j-1]
            pairs.append((i - 1, j - 1))
            i -= 1
            j -= 1
    pairs.reverse()
    if any(a_list[p] != b_list[q] for p, q in pairs):
        raise RuntimeError("LCS traceback produced a mismatched pair")
    return pairs


def _hirschberg_pairs(
    a: np.ndarray,
    b: np.ndarray,
    alphabet_size: int,
    full_table_cells: int,
    offset_a: int,
    offset_b: int,
    out: list[tuple[int, int]],
) -> None:
    m, n = len(a), len(b)
    if m == 0 or n == 0:
        return
    if m * n <= full_table_cells or m == 1:
        out.extend((i + offset_a, j + offset_b) for i, j in _full_table_pairs(a, b, alphabet_size))
        return

    mid = m // 2
    forward = _last_row(a[:mid], b, alphabet_size)
    backward = _last_row(a[mid:][::-1], b[::-1], alphabet_size)
    split = int(np.argmax(forward + backward[::-1]))
    _hirschberg_pairs(
        a[:mid], b[:split], alphabet_size, full_table_cells, offset_a, offset_b, out
    )
    _hirschberg_pairs(
        a[mid:], b[split:], alphabet_size, full_table_cells, offset_a + mid, offset_b + split, out
    )


def lcs_witness(
    u: Word,
    w: Word,
    *,
    full_table_cells: int = DEFAULT_FULL_TABLE_CELLS,
) -> SubsequenceWitness:
    """A maximum-length common subsequence of ``u`` and ``w`` with its embeddings.

    Inputs whose DP table exceeds ``full_table_cells`` are split Hirschberg-style,
    so memory stays linear in the input length.
    """
    _require_same_alphabet(u, w)
    pairs: list[tuple[int, int]] = []
    _hirschberg_pairs(
        _as_array(u.symbols),
        _as_array(w.symbols),
        u.alphabet_size,
        max(1, full_table_cells),
        0,
        0,
        pairs,
    )
    idx_a = tuple(i for i, _ in pairs)
    idx_b = tuple(j for _, j in pairs)
    common = Word(tuple(u.symbols[i] for i in idx_a), u.alphabet_size)
    return SubsequenceWitness(common=common, idx_a=idx_a, idx_b=idx_b)


def pairwise_lcs_matrix(family: Sequence[Word]) -> list[list[int]]:
    size = len(family)
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        matrix[i][i] = len(family[i])
    for i, j in combinations(range(size), 2):
        value = lcs_len(family[i], family[j])
        matrix[i][j] = matrix[j][i] = value
    return matrix


def family_lcs(
    family: Sequence[Word],
    *,
    full_table_cells: int = DEFAULT_FULL_TABLE_CELLS,
) -> FamilyLcsResult:
    if len(family) < 2:
        raise ValidationError(f"family_lcs needs at least two words, got {len(family)}")
    k = family[0].alphabet_size
    for w in family:
        if w.alphabet_size != k:
            raise ValidationError("all words of a family must share one alphabet")

    best_length = -1
    best_pair = (0, 1)
    for i, j in combinations(range(len(family)), 2):
        value = lcs_len(family[i], family[j])
        if value > best_length:
            best_length, best_pair = value, (i, j)

    i, j = best_pair
    witness = lcs_witness(family[i], family[j], full_table_cells=full_table_cells)
    return FamilyLcsResult(length=best_length, pair=best_pair, witness=witness)
