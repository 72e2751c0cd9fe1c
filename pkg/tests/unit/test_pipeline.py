import numpy as np
import pytest

from src.common.exceptions import MatcherStageError, ValidationError
from src.lcs.engine import lcs_len
from src.matcher import pipeline
from src.matcher.params import MatcherParams
from src.matcher.pipeline import run_matcher
from tests.word_helpers import alternating, binary, random_balanced

DOCUMENT_KEYS = {"pair", "shortcut_used", "t", "sizes", "Q", "witness", "guarantee", "params"}


def test_identical_words_match_completely() -> None:
    w = alternating(64)
    report = run_matcher([w] * 4, MatcherParams(r=2))
    assert report.stage == "assembly"
    assert report.pair == (0, 1)
    assert report.q == 0
    assert report.length == 64
    assert report.witness.is_valid_for(w, w)
    assert report.length >= report.guarantee_value


def test_r_zero_returns_the_zeros() -> None:
    a, b = binary("0011"), binary("1100")
    report = run_matcher([a, b], MatcherParams(r=0))
    assert report.stage == "baseline"
    assert str(report.witness.common) == "00"
    assert report.guarantee_value == 2


def test_r_one_beats_half_by_one() -> None:
    rng = np.random.default_rng(5)
    for _ in range(25):
        family = [random_balanced(rng, 8) for _ in range(3)]
        report = run_matcher(family, MatcherParams(r=1))
        i, j = report.pair
        assert report.witness.is_valid_for(family[i], family[j])
        assert 5 <= report.length <= lcs_len(family[i], family[j])


def test_shared_bad_zero_takes_the_shortcut() -> None:
    family = [binary(t) for t in ("11110000", "11110000", "01010101", "10101010")]
    report = run_matcher(family, MatcherParams(r=2))
    assert report.stage == "shortcut"
    assert report.shortcut_used
    assert report.pair == (0, 1)
    assert report.length == 8


def test_family_shape_is_validated() -> None:
    w = alternating(8)
    with pytest.raises(ValidationError):
        run_matcher([w] * 3, MatcherParams(r=2))
    with pytest.raises(ValidationError):
        run_matcher([w, alternating(6)], MatcherParams(r=0))
    with pytest.raises(ValidationError):
        run_matcher([binary("0001"), binary("0011")], MatcherParams(r=0))


def test_document_shape_and_determinism() -> None:
    rng = np.random.default_rng(8)
    family = [random_balanced(rng, 32) for _ in range(4)]
    params = MatcherParams(r=2, alpha_eff=0.05, beta_eff=0.05)
    first = run_matcher(family, params)
    second = run_matcher(family, params)
    document = first.to_document()
    assert set(document) == DOCUMENT_KEYS
    assert set(document["sizes"]) == {"T", "S", "E", "lambda"}
    assert document["witness"]["length"] == first.length
    assert document == second.to_document()
    assert first.diagnostics()["stage"] == first.stage


def test_stage_failure_falls_back_to_zeros(monkeypatch: pytest.MonkeyPatch) -> None:
    def failing_shift(*args: object, **kwargs: object) -> None:
        raise MatcherStageError("no intervals")

    monkeypatch.setattr(pipeline, "best_shift", failing_shift)
    w = alternating(16)
    report = run_matcher([w] * 4, MatcherParams(r=2))
    assert report.stage == "intervals"
    assert report.fallback_reason == "no intervals"
    assert report.length == 8
    assert report.t == 0
