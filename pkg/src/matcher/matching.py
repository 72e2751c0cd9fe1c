from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Collection, Sequence

from .shift import ClosePairGraph

Pair = tuple[int, int]


@dataclass(frozen=True)
class NonCrossingMatching:
    pairs: tuple[Pair, ...]
    max_degree: int
    edge_count: int
    uncrossings: int
    dropped: int

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def lower_bound(self) -> int:
        if self.max_degree == 0:
            return 0
        return math.ceil(self.edge_count / (2 * self.max_degree))


def is_noncrossing(pairs: Sequence[Pair]) -> bool:
    ordered = sorted(pairs)
    return all(a[0] < b[0] and a[1] < b[1] for a, b in zip(ordered, ordered[1:]))


def maximal_matching(edges: Sequence[Pair]) -> list[Pair]:
    """Greedy maximal matching in (left, right) order."""
    used_left: set[int] = set()
    used_right: set[int] = set()
    chosen: list[Pair] = []
    for i, j in sorted(edges):
        if i in used_left or j in used_right:
            continue
        used_left.add(i)
        used_right.add(j)
        chosen.append((i, j))
    return chosen


def uncross(pairs: Sequence[Pair], edges: Collection[Pair]) -> tuple[list[Pair], int, int]:
    """Swap partners of adjacent crossing pairs until rights increase with lefts.

    A swap needs both replacement edges; when one is missing the later pair is
    dropped. Returns the pairs, the number of swaps and the number dropped.
    """
    edge_set = set(edges)
    result: list[Pair] = []
    swaps = dropped = 0
    for pair in sorted(pairs):
        result.append(pair)
        pos = len(result) - 1
        while pos > 0 and result[pos - 1][1] > result[pos][1]:
            (l0, r0), (l1, r1) = result[pos - 1], result[pos]
            if (l0, r1) in edge_set and (l1, r0) in edge_set:
                result[pos - 1], result[pos] = (l0, r1), (l1, r0)
                swaps += 1
                pos -= 1
            else:
                result.pop(pos)
                dropped += 1
                break
    return result, swaps, dropped


def noncrossing_matching(graph: ClosePairGraph) -> NonCrossingMatching:
    pairs, swaps, dropped = uncross(maximal_matching(graph.edges), graph.edges)
    return NonCrossingMatching(
        pairs=tuple(pairs),
        max_degree=graph.max_degree(),
        edge_count=graph.edge_count,
        uncrossings=swaps,
        dropped=dropped,
    )
