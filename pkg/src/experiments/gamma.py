from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..common.exceptions import BudgetExceededError, ValidationError
from ..common.logging import get_logger
from ..lcs.engine import lcs_len
from ..words.core import Word

logger = get_logger(__name__)

LOG_EVERY = 50


class GammaEstimate(BaseModel):
    """Monte Carlo statistics of LCS(u, w) / n for uniform random words over k letters."""

    k: int = Field(ge=1)
    n: int = Field(ge=1)
    samples: int = Field(ge=2)
    seed: int = Field(ge=0)
    confidence_z: float = Field(gt=0)
    mean_lcs: float
    mean_ratio: float = Field(ge=0.0, le=1.0)
    std_dev: float = Field(ge=0.0)
    ci95: tuple[float, float]
    gamma_sqrtk: float
    min_lcs: int
    max_lcs: int
    concentration_ratio: float

    @model_validator(mode="after")
    def _interval_contains_mean(self) -> GammaEstimate:
        lo, hi = self.ci95
        if not lo <= self.mean_ratio <= hi:
            raise ValueError(f"ci95 {self.ci95} does not contain mean_ratio {self.mean_ratio}")
        return self


def sample_pair(generator: np.random.Generator, k: int, n: int) -> tuple[Word, Word]:
    draws = generator.integers(0, k, size=(2, n))
    return Word.of(draws[0].tolist(), k), Word.of(draws[1].tolist(), k)


def lcs_samples(k: int, n: int, samples: int, seed: int) -> np.ndarray:
    """LCS length of one random pair per sample; sample i draws from substream i."""
    children = np.random.SeedSequence(seed).spawn(samples)
    lengths = np.empty(samples, dtype=np.int64)
    for i, child in enumerate(children):
        u, w = sample_pair(np.random.Generator(np.random.Philox(child)), k, n)
        lengths[i] = lcs_len(u, w)
        if (i + 1) % LOG_EVERY == 0:
            logger.info("Gamma k=%s n=%s: %s/%s samples done", k, n, i + 1, samples)
    return lengths


def estimate_gamma(
    k: int,
    n: int,
    samples: int,
    seed: int,
    *,
    confidence_z: float = 1.96,
    cell_budget: int | None = None,
) -> GammaEstimate:
    if k < 1 or n < 1:
        raise ValidationError(f"k and n must be >= 1, got k={k}, n={n}")
    if samples < 2:
        raise ValidationError(f"samples must be >= 2, got {samples}")
    if seed < 0:
        raise ValidationError(f"seed must be >= 0, got {seed}")
    cells = samples * n * n
    if cell_budget is not None and cells > cell_budget:
        raise BudgetExceededError(
            f"gamma run needs {cells} DP cells, budget is {cell_budget}"
        )

    lengths = lcs_samples(k, n, samples, seed)
    mean_lcs = float(lengths.mean())
    std_dev = float(lengths.std(ddof=1))
    mean_ratio = mean_lcs / n
    margin = confidence_z * (std_dev / n) / math.sqrt(samples)
    return GammaEstimate(
        k=k,
        n=n,
        samples=samples,
        seed=seed,
        confidence_z=confidence_z,
        mean_lcs=mean_lcs,
        mean_ratio=mean_ratio,
        std_dev=std_dev,
        ci95=(mean_ratio - margin, mean_ratio + margin),
        gamma_sqrtk=mean_ratio * math.sqrt(k),
        min_lcs=int(lengths.min()),
        max_lcs=int(lengths.max()),
        concentration_ratio=std_dev / math.sqrt(n),
    )
