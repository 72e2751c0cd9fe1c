from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


def asymptotic_alpha(r: int) -> float:
    return 1e-6 * max(r, 1) ** -9


def asymptotic_beta(r: int) -> float:
    return max(r, 1) ** -6 / 40000


class MatcherParams(BaseModel):
    """Matcher tuning. Unset multipliers default to the asymptotic constants."""

    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=0)
    alpha_eff: float = Field(gt=0)
    beta_eff: float = Field(gt=0)
    shift_strategy: Literal["exhaustive", "sampled"] = "exhaustive"
    sample_count: int = Field(default=64, ge=1)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="before")
    @classmethod
    def _fill_asymptotic_defaults(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            r = data.get("r", 0)
            if isinstance(r, int):
                if data.get("alpha_eff") is None:
                    data["alpha_eff"] = asymptotic_alpha(r)
                if data.get("beta_eff") is None:
                    data["beta_eff"] = asymptotic_beta(r)
        return data

    @property
    def uses_asymptotic_constants(self) -> bool:
        r = self.r
        return math.isclose(self.alpha_eff, asymptotic_alpha(r), rel_tol=1e-12) and math.isclose(
            self.beta_eff, asymptotic_beta(r), rel_tol=1e-12
        )


def ceil_scaled_root(n: int, t: int, r: int, num: int = 1, den: int = 1) -> int:
    """Smallest integer c >= 0 with c >= (num/den) * n^(t/r), using exact arithmetic."""
    if r < 1:
        raise ValueError("r must be >= 1")
    target = num**r * n**t

    def fits(c: int) -> bool:
        return (den * c) ** r >= target

    estimate = max(0, math.ceil(num / den * n ** (t / r)))
    c = estimate
    while c > 0 and fits(c - 1):
        c -= 1
    while not fits(c):
        c += 1
    return c


def asymptotic_regime(n: int, r: int) -> bool:
    return r >= 1 and n >= (10 * r) ** (9 * r)


@dataclass(frozen=True)
class MatcherThresholds:
    """Integer materialization of the real-valued thresholds for one word length."""

    n: int
    r: int
    deviation: int
    block_ones: int
    scale: float

    @classmethod
    def from_params(cls, n: int, params: MatcherParams) -> MatcherThresholds:
        r = max(params.r, 1)
        scale = n ** (1 - 1 / r)
        return cls(
            n=n,
            r=r,
            deviation=max(1, math.ceil(params.alpha_eff * scale)),
            block_ones=max(1, math.ceil(params.beta_eff * scale)),
            scale=scale,
        )

    def rich_length(self, t: int) -> int:
        return max(1, ceil_scaled_root(self.n, t, self.r))

    def rich_max_ones(self, t: int) -> int:
        return self.rich_length(t) // 10

    def close_radius(self, t: int) -> int:
        return max(1, ceil_scaled_root(self.n, t, self.r, den=20))

    def right_radius(self, t: int) -> int:
        # integer counterpart of 3 n^(t/r) / 20: closeness radius plus interval ones
        return self.close_radius(t) + self.rich_max_ones(t)

    def degree_cap(self) -> int:
        return max(1, ceil_scaled_root(self.n, 1, self.r))

    def shift_range(self) -> range:
        return range(-(self.block_ones - 1), self.block_ones)
