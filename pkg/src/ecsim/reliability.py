"""Weibull lifetime model for cache daemons.

Machine lifetimes are short and wear-driven, so the failure density is
p(x) = (a/b) * (x/b)**(a-1) * exp(-(x/b)**a) with shape a and scale b in
minutes.  The defaults (a=2, b=50) give a mean lifetime of about 44 minutes
with a hazard that climbs roughly linearly with age.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass


@dataclass(frozen=True)
class WeibullParams:
    shape: float = 2.0
    scale: float = 50.0  # minutes

    def __post_init__(self):
        if self.shape <= 0 or self.scale <= 0:
            raise ValueError("Weibull shape and scale must be positive")

    @property
    def mean(self) -> float:
        return self.scale * math.gamma(1.0 + 1.0 / self.shape)


@dataclass(frozen=True)
class FailureRateQuery:
    """Ask: given survival to t0, how likely is death within the next delta_t?"""

    t0: float
    delta_t: float

    def __post_init__(self):
        if self.t0 < 0:
            raise ValueError("t0 must be >= 0")
        if self.delta_t <= 0:
            raise ValueError("delta_t must be > 0")


def pdf(x: float, params: WeibullParams) -> float:
    """Failure density at age x minutes."""
    if x < 0:
        raise ValueError("lifetime density undefined for x < 0")
    a, b = params.shape, params.scale
    if x == 0:
        # (x/b)**(a-1) limit: 0 for a > 1, 1 for a == 1, diverges below
        if a > 1:
            return 0.0
        if a == 1:
            return a / b
        return math.inf
    z = x / b
    return (a / b) * z ** (a - 1.0) * math.exp(-(z ** a))


def cdf(x: float, params: WeibullParams) -> float:
    """Probability a lifetime ends by age x."""
    if x <= 0:
        return 0.0
    return 1.0 - math.exp(-((x / params.scale) ** params.shape))


def survival(x: float, params: WeibullParams) -> float:
    return 1.0 - cdf(x, params)


def sample_lifetime(params: WeibullParams, rng: random.Random) -> float:
    """Draw one lifetime by inverse-CDF: b * (-ln(1-u))**(1/a)."""
    u = rng.random()
    return params.scale * (-math.log(1.0 - u)) ** (1.0 / params.shape)


def conditional_failure_rate(query: FailureRateQuery, params: WeibullParams) -> float:
    """P(death in (t0, t0+dt] | alive at t0).

    The ratio of the density integrated over the window to the survival mass
    past t0 collapses to 1 - exp((t0/b)**a - ((t0+dt)/b)**a), which is what
    this returns; it is monotone in t0 for a > 1 and always in [0, 1).
    """
    a, b = params.shape, params.scale
    t0, t1 = query.t0, query.t0 + query.delta_t
    return 1.0 - math.exp((t0 / b) ** a - (t1 / b) ** a)
