"""Mean time to data loss for an n-unit stripe tolerating r failures.

The chain model: with i units already down, failures arrive at (n-i)*lambda
and repairs complete at i*mu; absorbing state at r+1 simultaneous failures.
Time is measured in repair intervals, so mu = 1 means one repair per
availability check.  The closed forms below sum the expected sojourn terms

    t_i = sum_{j=0..i} N_j / D_j
    D_j = prod_{m=0..j} (n - (r - i + m)) * lambda
    N_j = 1.0 for j = 0, else prod_{m=1..j} (r - i + m) * mu

and MTTDL = sum_i t_i.  The r=1 and r=2 cases are also written out the
long way so the general recurrence can be cross-checked against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .erasure import StoragePolicy
from .reliability import FailureRateQuery, WeibullParams, conditional_failure_rate


@dataclass(frozen=True)
class MarkovParams:
    n: int
    r: int
    lam: float  # per-unit failure probability per repair interval
    mu: float = 1.0  # repairs per interval; 0 models no repair at all

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one unit")
        if not 0 <= self.r < self.n:
            raise ValueError("tolerated failures r must satisfy 0 <= r < n")
        if self.lam <= 0:
            raise ValueError("lambda must be > 0")
        if self.mu < 0:
            raise ValueError("mu must be >= 0")


@dataclass(frozen=True)
class MttdlResult:
    mttdl: float  # in repair intervals
    terms: tuple[float, ...]  # expected sojourn per degradation level

    @property
    def data_loss_rate(self) -> float:
        return 1.0 / self.mttdl


def mttdl_raid5(n: int, lam: float, mu: float = 1.0) -> MttdlResult:
    """Single-failure tolerance, written out term by term."""
    _validate(n, 1, lam, mu)
    t0 = 1.0 / ((n - 1) * lam)
    t1 = 1.0 / (n * lam) + mu / (n * (n - 1) * lam ** 2)
    return MttdlResult(t0 + t1, (t0, t1))


def mttdl_raid6(n: int, lam: float, mu: float = 1.0) -> MttdlResult:
    """Double-failure tolerance, written out term by term."""
    _validate(n, 2, lam, mu)
    t0 = 1.0 / ((n - 2) * lam)
    t1 = 1.0 / ((n - 1) * lam) + 2.0 * mu / ((n - 1) * (n - 2) * lam ** 2)
    t2 = (
        1.0 / (n * lam)
        + mu / (n * (n - 1) * lam ** 2)
        + 2.0 * mu ** 2 / (n * (n - 1) * (n - 2) * lam ** 3)
    )
    return MttdlResult(t0 + t1 + t2, (t0, t1, t2))


def mttdl_general(params: MarkovParams) -> MttdlResult:
    """Sojourn-sum MTTDL for any 0 <= r < n."""
    n, r, lam, mu = params.n, params.r, params.lam, params.mu
    terms = []
    for i in range(r + 1):
        t_i = 0.0
        for j in range(i + 1):
            denom = 1.0
            for m in range(j + 1):
                denom *= (n - (r - i + m)) * lam
            numer = 1.0
            for m in range(1, j + 1):
                numer *= (r - i + m) * mu
            t_i += numer / denom
        terms.append(t_i)
    return MttdlResult(math.fsum(terms), tuple(terms))


def _validate(n: int, r: int, lam: float, mu: float) -> None:
    MarkovParams(n, r, lam, mu)  # reuse the dataclass checks


def policy_tolerance(policy: StoragePolicy) -> tuple[int, int]:
    """(n, r) for the chain: any policy survives r = n - k unit losses."""
    return policy.n, policy.n - policy.k


def mttdl_at_age(
    policy: StoragePolicy,
    age_min: float,
    check_interval_min: float,
    weibull: WeibullParams,
    mu: float = 1.0,
) -> MttdlResult:
    """MTTDL of a stripe whose units sit on machines of the given age.

    The per-interval failure probability is the Weibull hazard mass over one
    check interval conditioned on survival to the age, fed into the chain.
    """
    lam = conditional_failure_rate(FailureRateQuery(age_min, check_interval_min), weibull)
    n, r = policy_tolerance(policy)
    return mttdl_general(MarkovParams(n, r, lam, mu))


def crossing_age(
    policy: StoragePolicy,
    threshold: float,
    check_interval_min: float,
    weibull: WeibullParams,
    hi: float = 500.0,
) -> float:
    """Age at which MTTDL falls to the threshold (bisection; MTTDL is
    strictly decreasing in age because the hazard is increasing)."""
    lo = 0.0
    if mttdl_at_age(policy, lo, check_interval_min, weibull).mttdl <= threshold:
        return 0.0
    if mttdl_at_age(policy, hi, check_interval_min, weibull).mttdl > threshold:
        raise ValueError("threshold not reached below the search bound")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mttdl_at_age(policy, mid, check_interval_min, weibull).mttdl > threshold:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def crossing_lambda(n_a: int, r_a: int, n_b: int, r_b: int, mu: float = 1.0,
                    lo: float = 1e-4, hi: float = 0.9) -> float:
    """Failure rate where two stripe shapes trade places in MTTDL."""

    def gap(lam: float) -> float:
        a = mttdl_general(MarkovParams(n_a, r_a, lam, mu)).mttdl
        b = mttdl_general(MarkovParams(n_b, r_b, lam, mu)).mttdl
        return a - b

    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo == 0:
        return lo
    if g_lo * g_hi > 0:
        raise ValueError("no MTTDL crossing inside the bracket")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if gap(lo) * gap(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
