from __future__ import annotations

import sys
from functools import lru_cache

from ..common.exceptions import ValidationError
from ..words.core import Word


def lcs_reference(u: Word, w: Word) -> int:
    """Top-down memoized LCS, independent of the iterative engine."""
    if u.alphabet_size != w.alphabet_size:
        raise ValidationError(
            f"alphabet sizes differ: {u.alphabet_size} != {w.alphabet_size}"
        )
    a, b = u.symbols, w.symbols
    if len(a) + len(b) + 50 > sys.getrecursionlimit():
        raise ValidationError("lcs_reference is meant for short words")

    @lru_cache(maxsize=None)
    def solve(i: int, j: int) -> int:
        if i == len(a) or j == len(b):
            return 0
        if a[i] == b[j]:
            return 1 + solve(i + 1, j + 1)
        return max(solve(i + 1, j), solve(i, j + 1))

    return solve(0, 0)
