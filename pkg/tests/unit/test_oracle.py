import pytest

from src.common.exceptions import BudgetExceededError, ValidationError
from src.oracle.enumeration import (
    FamilySpace,
    balanced_count,
    enumerate_balanced,
    enumerate_words,
    min_family_lcs,
)
from src.oracle.reference import lcs_reference
from src.words.core import parse_word
from tests.word_helpers import binary

BUDGET = 10**7


def test_reference_examples() -> None:
    assert lcs_reference(binary("0011"), binary("1100")) == 2
    assert lcs_reference(binary("0101"), binary("0011")) == 3
    assert lcs_reference(binary("0110"), binary("0110")) == 4
    assert lcs_reference(parse_word("1334", 5), parse_word("12341234", 5)) == 4
    with pytest.raises(ValidationError):
        lcs_reference(binary("01"), parse_word("01", 3))


def test_balanced_enumeration_is_lexicographic() -> None:
    words = [str(w) for w in enumerate_balanced(4, 2)]
    assert words == ["0011", "0101", "0110", "1001", "1010", "1100"]
    assert [str(w) for w in enumerate_balanced(2, 2)] == ["01", "10"]
    assert sum(1 for _ in enumerate_balanced(6, 3)) == 90 == balanced_count(6, 3)
    with pytest.raises(ValidationError):
        enumerate_balanced(5, 2)
    with pytest.raises(BudgetExceededError):
        enumerate_balanced(6, 3, budget=89)


def test_word_enumeration_counts() -> None:
    assert sum(1 for _ in enumerate_words(3, 3)) == 27
    with pytest.raises(BudgetExceededError):
        enumerate_words(20, 2, budget=1000)


def test_family_space_normalises_universe() -> None:
    space = FamilySpace(n=4, k=2, universe="balanced", t=3)
    assert space.universe == "balanced-only"
    assert space.selection_count() == 20
    assert FamilySpace(n=4, k=2, universe="all", t=3, multiset=True).selection_count() == 816
    with pytest.raises(ValueError):
        FamilySpace(n=5, k=2, universe="balanced", t=3)


def test_min_family_lcs_small_cases() -> None:
    all_words = min_family_lcs(FamilySpace(n=4, k=2, universe="all", t=3), budget=BUDGET)
    assert all_words.value == 2
    assert all_words.selections_checked == 560

    triples = min_family_lcs(FamilySpace(n=4, k=2, universe="balanced", t=3), budget=BUDGET)
    assert triples.value == 3

    pairs = min_family_lcs(FamilySpace(n=4, k=2, universe="balanced", t=2), budget=BUDGET)
    assert pairs.value == 2
    assert lcs_reference(*pairs.family) == 2


def test_min_family_lcs_respects_the_budget() -> None:
    with pytest.raises(BudgetExceededError):
        min_family_lcs(FamilySpace(n=8, k=2, universe="all", t=3), budget=1000)
    with pytest.raises(ValidationError):
        min_family_lcs(FamilySpace(n=2, k=2, universe="balanced", t=3), budget=BUDGET)
