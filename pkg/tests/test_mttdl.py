"""Mean-time-to-data-loss closed forms against a linear-solve oracle."""

from fractions import Fraction

import pytest

from ecsim.erasure import StoragePolicy
from ecsim.mttdl import (
    MarkovParams,
    crossing_age,
    crossing_lambda,
    mttdl_at_age,
    mttdl_general,
    mttdl_raid5,
    mttdl_raid6,
    policy_tolerance,
)
from ecsim.reliability import WeibullParams

LAMBDAS = (0.01, 0.05, 0.1, 0.3, 0.5)
MUS = (0.5, 1.0, 2.0)


def absorption_time(n: int, r: int, lam: float, mu: float) -> float:
    """Expected hitting time of the (r+1)-failures state, solved from the
    generator matrix of the repairable-failure chain.

    The elimination runs on exact rationals so the oracle itself carries no
    rounding error: the chains with tiny failure and large repair rates have
    absorption times around 1e9 where a float64 solve only reaches ~1e-8
    relative accuracy, which would drown out the tolerance under test.
    """
    size = r + 1
    gen = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(-1)] * size
    for i in range(size):
        down = Fraction(n - i) * Fraction(lam)
        up = Fraction(i) * Fraction(mu)
        gen[i][i] = -(down + up)
        if i < r:
            gen[i][i + 1] = down
        if i > 0:
            gen[i][i - 1] = up
    for col in range(size):
        pivot = next(row for row in range(col, size) if gen[row][col] != 0)
        gen[col], gen[pivot] = gen[pivot], gen[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        for row in range(size):
            if row != col and gen[row][col] != 0:
                factor = gen[row][col] / gen[col][col]
                for j in range(size):
                    gen[row][j] -= factor * gen[col][j]
                rhs[row] -= factor * rhs[col]
    return float(rhs[0] / gen[0][0])


def test_general_matches_single_parity_form():
    for n in range(2, 11):
        for lam in LAMBDAS:
            for mu in MUS:
                reference = mttdl_raid5(n, lam, mu).mttdl
                value = mttdl_general(MarkovParams(n, 1, lam, mu)).mttdl
                assert abs(value - reference) / reference < 1e-12


def test_general_matches_double_parity_form():
    for n in range(3, 11):
        for lam in LAMBDAS:
            for mu in MUS:
                reference = mttdl_raid6(n, lam, mu).mttdl
                value = mttdl_general(MarkovParams(n, 2, lam, mu)).mttdl
                assert abs(value - reference) / reference < 1e-12


def test_general_matches_markov_oracle():
    for n in range(2, 9):
        for r in range(0, n):
            for lam in LAMBDAS:
                for mu in MUS:
                    reference = absorption_time(n, r, lam, mu)
                    value = mttdl_general(MarkovParams(n, r, lam, mu)).mttdl
                    assert abs(value - reference) / reference < 1e-9


def test_hand_derived_values():
    assert mttdl_general(MarkovParams(2, 1, 0.1, 1.0)).mttdl == pytest.approx(
        65.0, rel=1e-9
    )
    assert mttdl_general(MarkovParams(5, 2, 0.1, 1.0)).mttdl == pytest.approx(
        377.0 / 6.0, rel=1e-9
    )
    assert mttdl_raid5(4, 0.1, 1.0).mttdl == pytest.approx(17.0 / 1.2, rel=1e-12)
    assert mttdl_raid5(2, 1.0, 0.0).mttdl == pytest.approx(1.5, rel=1e-12)
    assert mttdl_raid6(3, 1.0, 0.0).mttdl == pytest.approx(11.0 / 6.0, rel=1e-12)


def test_data_loss_rate_is_reciprocal():
    result = mttdl_general(MarkovParams(4, 1, 0.1, 1.0))
    assert result.data_loss_rate == pytest.approx(1.0 / result.mttdl, rel=1e-12)


def test_monotonic_in_cluster_size_and_parity():
    # more units at the same tolerance fail sooner
    values = [mttdl_general(MarkovParams(n, 1, 0.1, 1.0)).mttdl for n in range(2, 11)]
    assert all(a > b for a, b in zip(values, values[1:]))
    # more parity on the same data lasts longer
    single = mttdl_general(MarkovParams(4, 1, 0.1, 1.0)).mttdl
    double = mttdl_general(MarkovParams(5, 2, 0.1, 1.0)).mttdl
    assert double > single


def test_params_validation():
    with pytest.raises(ValueError):
        MarkovParams(0, 0, 0.1, 1.0)
    with pytest.raises(ValueError):
        MarkovParams(3, 3, 0.1, 1.0)
    with pytest.raises(ValueError):
        MarkovParams(3, -1, 0.1, 1.0)
    with pytest.raises(ValueError):
        MarkovParams(3, 1, 0.0, 1.0)
    with pytest.raises(ValueError):
        MarkovParams(3, 1, 0.1, -0.5)


def test_policy_tolerance():
    assert policy_tolerance(StoragePolicy.parse("ec3+2")) == (5, 2)
    assert policy_tolerance(StoragePolicy.parse("replica2")) == (2, 1)
    assert policy_tolerance(StoragePolicy.parse("replica1")) == (1, 0)


def test_mttdl_at_age_decreases():
    policy = StoragePolicy.parse("ec3+1")
    weibull = WeibullParams()
    values = [
        mttdl_at_age(policy, float(age), 2.0, weibull).mttdl
        for age in (0, 10, 20, 30, 50, 80)
    ]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_crossing_age_brackets_the_threshold():
    policy = StoragePolicy.parse("ec3+1")
    weibull = WeibullParams()
    age = crossing_age(policy, 60.0, 2.0, weibull)
    assert 22.0 <= age <= 28.0
    before = mttdl_at_age(policy, age - 0.01, 2.0, weibull).mttdl
    after = mttdl_at_age(policy, age + 0.01, 2.0, weibull).mttdl
    assert before > 60.0 > after


def test_crossing_lambda_between_policies():
    lam_star = crossing_lambda(5, 2, 2, 1)
    assert 0.05 < lam_star < 0.1
    # the wider stripe wins at low failure rates and loses at high ones
    low_a = mttdl_general(MarkovParams(5, 2, 0.05, 1.0)).mttdl
    low_b = mttdl_general(MarkovParams(2, 1, 0.05, 1.0)).mttdl
    high_a = mttdl_general(MarkovParams(5, 2, 0.1, 1.0)).mttdl
    high_b = mttdl_general(MarkovParams(2, 1, 0.1, 1.0)).mttdl
    assert low_a > low_b
    assert high_a < high_b


def test_crossing_lambda_requires_a_crossing():
    # same stripe width, strictly more parity: never crosses
    with pytest.raises(ValueError):
        crossing_lambda(3, 2, 3, 1)
