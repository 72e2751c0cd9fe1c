from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from ..common.exceptions import MatcherStageError
from .annotation import AnnotatedWord


@dataclass(frozen=True)
class PairSelection:
    i1: int
    i2: int
    t: int
    ordinals: tuple[int, ...]


def select_pair_and_type(family: Sequence[AnnotatedWord], r: int) -> PairSelection:
    """Pair of words and type t in 0..r-2 maximizing the shared-type ordinal set."""
    best: PairSelection | None = None
    best_size = 0
    for i1, i2 in combinations(range(len(family)), 2):
        first, second = family[i1].types, family[i2].types
        agree = first == second
        for t in range(0, max(r - 1, 0)):
            mask = agree & (first == t)
            size = int(mask.sum())
            if size > best_size:
                best_size = size
                ordinals = tuple((np.flatnonzero(mask) + 1).tolist())
                best = PairSelection(i1=i1, i2=i2, t=t, ordinals=ordinals)
    if best is None:
        raise MatcherStageError("no pair of words shares a zero type on any ordinal")
    return best
