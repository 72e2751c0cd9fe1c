from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..common.exceptions import ValidationError
from ..words.core import (
    SubsequenceWitness,
    Word,
    concat,
    constant_word,
    letter_counts,
    most_frequent_letter,
    power,
    run_lengths,
)


@dataclass(frozen=True)
class LayerScale:
    n: int
    k: int
    r: int
    i: int
    m_i: int


@dataclass(frozen=True)
class BoundValue:
    n: int
    k: int
    r: int
    value: float

    def rounded(self) -> float:
        return round(self.value, 3)


@dataclass(frozen=True)
class BoundPair:
    upper: BoundValue
    lower_form: BoundValue


@dataclass(frozen=True)
class PopularLetterPair:
    pair: tuple[int, int]
    letter: int
    witness: SubsequenceWitness


def _check_family_params(n: int, k: int, r: int) -> None:
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    if r < 1:
        raise ValidationError(f"r must be >= 1, got {r}")
    if n < k:
        raise ValidationError(f"n must be >= k, got n={n}, k={k}")


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def scale_m(n: int, k: int, r: int, i: int) -> LayerScale:
    _check_family_params(n, k, r)
    if not 0 <= i <= r:
        raise ValidationError(f"layer index must be in 0..{r}, got {i}")
    if i == r and n % k == 0:
        m_i = n // k
    else:
        m_i = max(1, _round_half_up((n / k) ** (i / r)))
    return LayerScale(n=n, k=k, r=r, i=i, m_i=m_i)


def layer_scales(n: int, k: int, r: int) -> list[int]:
    return [scale_m(n, k, r, i).m_i for i in range(r + 1)]


def build_layer_word(n: int, k: int, m: int, reversed: bool = False) -> Word:
    """Balanced word made of runs of length ``m`` cycling through the alphabet.

    The block ``0^m 1^m ... (k-1)^m`` (descending when ``reversed``) repeats
    ``n // (k*m)`` times; the leftover ``q*k`` symbols are emitted as runs of
    length ``q`` in the same letter order, so every letter occurs ``n/k`` times.
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if m < 1:
        raise ValidationError(f"run length must be >= 1, got {m}")
    if n % k:
        raise ValidationError(f"n={n} is not a multiple of k={k}; cannot balance")
    if n < k * m:
        raise ValidationError(f"n={n} is shorter than one block of k*m={k * m} symbols")

    order = list(range(k - 1, -1, -1)) if reversed else list(range(k))
    block = concat([constant_word(symbol, m, k) for symbol in order])
    repeats, remainder = divmod(n, k * m)
    tail = concat([constant_word(symbol, remainder // k, k) for symbol in order])
    return concat([power(block, repeats), tail])


def build_family_main(n: int, k: int, r: int) -> list[Word]:
    """The family w_0, ..., w_r, rev w_r, 0^n, ..., (k-1)^n."""
    _check_family_params(n, k, r)
    if n % k:
        raise ValidationError(f"n={n} is not a multiple of k={k}")
    scales = layer_scales(n, k, r)
    layers = [build_layer_word(n, k, m) for m in scales]
    reversed_top = build_layer_word(n, k, scales[-1], reversed=True)
    constants = [constant_word(symbol, n, k) for symbol in range(k)]
    return layers + [reversed_top] + constants


_MODE_ALIASES = {"unary": "unary", "unary-t": "unary", "kplus1": "kplus1", "k-plus-1": "kplus1"}


def build_baseline_family(n: int, k: int, mode: str, t: int | None = None) -> list[Word]:
    """Constant words 0^n..(t-1)^n, or all k of them plus (01..k-1)^(n/k)."""
    mode = _MODE_ALIASES.get(mode, mode)
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    if mode == "unary":
        size = k if t is None else t
        if not 2 <= size <= k:
            raise ValidationError(f"unary family size must be in 2..{k}, got {size}")
        return [constant_word(symbol, n, k) for symbol in range(size)]
    if mode == "kplus1":
        if n % k:
            raise ValidationError(f"n={n} is not a multiple of k={k}")
        return [constant_word(symbol, n, k) for symbol in range(k)] + [
            build_layer_word(n, k, 1)
        ]
    raise ValidationError(f"unknown baseline mode {mode!r}; use 'unary' or 'kplus1'")


def bound_values(n: int, k: int, r: int, c: float = 0.0) -> BoundPair:
    """Upper bound n/k + k^(1/r) n^(1-1/r) and the lower-bound shape n/k + c n^(1-1/r).

    ``c`` is caller supplied; no default constant is claimed.
    """
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    if r < 1:
        raise ValidationError(f"r must be >= 1, got {r}")
    scale = n ** (1 - 1 / r)
    upper = n / k + k ** (1 / r) * scale
    lower = n / k + c * scale
    return BoundPair(
        upper=BoundValue(n=n, k=k, r=r, value=upper),
        lower_form=BoundValue(n=n, k=k, r=r, value=lower),
    )


def rounding_slack(n: int, k: int, r: int) -> int:
    """Additive slack for comparisons against the upper bound.

    The top layer is exact (m_r = n/k), so the rounding distortion is one block
    of the finest rounded layer, k * m_(r-1).
    """
    return k * scale_m(n, k, r, r - 1).m_i


def run_excess(common: Word, m: int) -> int:
    """Sum of (p - m) * k over the maximal runs p of ``common``.

    A run of p equal letters inside a layer word with run length ``m`` spans at
    least (p - m) * k of its symbols, and the runs of a common subsequence use
    disjoint stretches.
    """
    if m < 1:
        raise ValidationError(f"run length must be >= 1, got {m}")
    k = common.alphabet_size
    return sum((length - m) * k for _, length in run_lengths(common))


def run_excess_limit(n: int, k: int, m: int) -> int:
    """Largest ``run_excess`` a common subsequence with ``build_layer_word(n, k, m)`` can have.

    Runs reaching into the short tail lose up to k per tail symbol.
    """
    if m < 1 or n < k * m:
        raise ValidationError(f"no layer word of run length {m} for n={n}, k={k}")
    return n + k * (n % (k * m))


def popular_letter_bound(family: Sequence[Word]) -> PopularLetterPair:
    """Two words sharing their most frequent letter, with the common run of it.

    With k + 1 words over k letters such a pair always exists, and the witness
    has length at least n/k.
    """
    if len(family) < 2:
        raise ValidationError("need at least two words")
    k = family[0].alphabet_size
    popular = [most_frequent_letter(w) for w in family]
    best: PopularLetterPair | None = None
    for i, j in combinations(range(len(family)), 2):
        if popular[i] != popular[j]:
            continue
        letter = popular[i]
        count = min(letter_counts(family[i])[letter], letter_counts(family[j])[letter])
        idx_a = tuple(p for p, s in enumerate(family[i]) if s == letter)[:count]
        idx_b = tuple(p for p, s in enumerate(family[j]) if s == letter)[:count]
        witness = SubsequenceWitness(constant_word(letter, count, k), idx_a, idx_b)
        if best is None or len(witness) > len(best.witness):
            best = PopularLetterPair(pair=(i, j), letter=letter, witness=witness)
    if best is None:
        raise ValidationError("no two words share their most frequent letter")
    return best
