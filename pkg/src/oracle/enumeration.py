from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..common.exceptions import BudgetExceededError, ValidationError
from ..common.logging import get_logger
from ..words.core import Word
from .reference import lcs_reference

logger = get_logger(__name__)

Universe = Literal["all-words", "balanced-only"]
_UNIVERSE_ALIASES = {
    "all": "all-words",
    "all-words": "all-words",
    "balanced": "balanced-only",
    "balanced-only": "balanced-only",
}


class FamilySpace(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    k: int = Field(ge=1)
    universe: Universe
    t: int = Field(ge=2)
    multiset: bool = False

    @field_validator("universe", mode="before")
    @classmethod
    def _normalise_universe(cls, value: object) -> object:
        if isinstance(value, str):
            return _UNIVERSE_ALIASES.get(value.strip().lower(), value)
        return value

    @model_validator(mode="after")
    def _check_balanced_divisibility(self) -> FamilySpace:
        if self.universe == "balanced-only" and self.n % self.k:
            raise ValueError(f"balanced words need k | n, got n={self.n}, k={self.k}")
        return self

    def universe_size(self) -> int:
        if self.universe == "all-words":
            return self.k**self.n
        return balanced_count(self.n, self.k)

    def selection_count(self) -> int:
        size = self.universe_size()
        if self.multiset:
            return math.comb(size + self.t - 1, self.t)
        return math.comb(size, self.t)

    def cost(self) -> int:
        """Pairs times DP cells for the pairwise table plus the selection scan."""
        size = self.universe_size()
        return math.comb(size, 2) * self.n * self.n + self.selection_count() * math.comb(self.t, 2)


@dataclass(frozen=True)
class FamilyMinimum:
    value: int
    family: tuple[Word, ...]
    selections_checked: int


def balanced_count(n: int, k: int) -> int:
    if n % k:
        return 0
    part = n // k
    return math.factorial(n) // math.factorial(part) ** k


def _check_budget(cost: int, budget: int, label: str) -> None:
    if cost > budget:
        raise BudgetExceededError(f"{label} needs {cost:,} units; budget is {budget:,}")


def enumerate_balanced(n: int, k: int, *, budget: int | None = None) -> Iterator[Word]:
    """Every balanced word of length n over k letters once, in lexicographic order."""
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if n % k:
        raise ValidationError(f"k={k} does not divide n={n}")
    if budget is not None:
        _check_budget(balanced_count(n, k), budget, f"balanced enumeration (n={n}, k={k})")
    return _balanced_words(n, k)


def _balanced_words(n: int, k: int) -> Iterator[Word]:
    remaining = [n // k] * k
    prefix: list[int] = []

    def extend() -> Iterator[Word]:
        if len(prefix) == n:
            yield Word(tuple(prefix), k)
            return
        for symbol in range(k):
            if remaining[symbol]:
                remaining[symbol] -= 1
                prefix.append(symbol)
                yield from extend()
                prefix.pop()
                remaining[symbol] += 1

    return extend()


def enumerate_words(n: int, k: int, *, budget: int | None = None) -> Iterator[Word]:
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    if budget is not None:
        _check_budget(k**n, budget, f"word enumeration (n={n}, k={k})")
    return (Word(symbols, k) for symbols in product(range(k), repeat=n))


def min_family_lcs(space: FamilySpace, *, budget: int) -> FamilyMinimum:
    """Exact min over t-selections of the family maximum pairwise LCS."""
    _check_budget(space.cost(), budget, f"family scan {space.model_dump()}")
    if space.universe == "all-words":
        universe = list(enumerate_words(space.n, space.k))
    else:
        universe = list(enumerate_balanced(space.n, space.k))
    if not space.multiset and space.t > len(universe):
        raise ValidationError(
            f"cannot choose {space.t} distinct words from a universe of {len(universe)}"
        )
    logger.info(
        "Scanning %s selections of %s words from %s candidates",
        space.selection_count(),
        space.t,
        len(universe),
    )

    size = len(universe)
    table = [[0] * size for _ in range(size)]
    for i in range(size):
        table[i][i] = space.n
    for i, j in combinations(range(size), 2):
        table[i][j] = table[j][i] = lcs_reference(universe[i], universe[j])

    chooser = combinations_with_replacement if space.multiset else combinations
    best_value: int | None = None
    best_selection: tuple[int, ...] = ()
    checked = 0
    for selection in chooser(range(size), space.t):
        checked += 1
        value = max(table[a][b] for a, b in combinations(selection, 2))
        if best_value is None or value < best_value:
            best_value, best_selection = value, selection

    if best_value is None:
        raise ValidationError("empty selection space")
    return FamilyMinimum(
        value=best_value,
        family=tuple(universe[index] for index in best_selection),
        selections_checked=checked,
    )
