#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import numpy as np
import pytest
from subcondpy import SimulatedOracle, ProductDistribution, PointEstimate, uniform, point_mass, random_model
from subcondpy.estimator import trials_for, negative_binomial_count, sub_to_eval, median_amplify, \
    expected_queries, expected_queries_under
from subcondpy.utils import types, InfiniteExpectation, InvalidParameter, NonterminationSuspected


def _bit (p: float) -> ProductDistribution:
    return ProductDistribution([[p, 1.0 - p]])


def test_trials_for ():
    assert trials_for(4, 0.5) == 64
    assert trials_for(2, 0.4) == 50
    assert trials_for(4, 0.0625) == 4096


def test_certain_symbol_counts_exactly_k ():
    oracle = SimulatedOracle(_bit(1.0), seed=0)
    assert negative_binomial_count(oracle, (), 0, 10) == 10
    assert oracle.meter.count == 10


def test_negative_binomial_mean ():
    oracle = SimulatedOracle(_bit(0.5), seed=21)
    counts = [negative_binomial_count(oracle, (), 0, 64) for _ in range(1000)]
    assert abs(np.mean(counts) - 128.0) <= 5.0
    assert oracle.meter.count == sum(counts)


def test_negative_binomial_variance ():
    oracle = SimulatedOracle(_bit(0.5), seed=22)
    counts = [negative_binomial_count(oracle, (), 0, 64) for _ in range(10000)]
    assert np.var(counts, ddof=1) == pytest.approx(128.0, rel=0.1)


def test_negative_binomial_cap ():
    oracle = SimulatedOracle(point_mass("00"), seed=0)
    with pytest.raises(NonterminationSuspected):
        negative_binomial_count(oracle, (0,), 1, 10, trial_cap=1000)
    assert oracle.meter.count == 1000


def test_point_mass_estimate_is_exact ():
    oracle = SimulatedOracle(point_mass("10"), seed=0)
    estimate = sub_to_eval(oracle, 0.4, "10")
    assert estimate.value == 1.0
    assert estimate.queries == 2 * trials_for(2, 0.4)
    assert estimate.charged == estimate.queries


def test_uniform_estimate_success_rate ():
    oracle = SimulatedOracle(uniform(2), seed=5)
    estimates = [sub_to_eval(oracle, 0.45, "01") for _ in range(500)]
    hits = sum(estimate.within(0.25, 0.45) for estimate in estimates)
    assert all(min(e.per_coordinate_trials) >= e.k for e in estimates)
    assert oracle.meter.count == sum(e.queries for e in estimates)
    assert hits / 500 >= 0.60


def test_explicit_estimate_success_rate (table_model):
    oracle = SimulatedOracle(table_model, seed=6)
    estimates = [sub_to_eval(oracle, 0.4, "11") for _ in range(500)]
    assert np.mean([0.6 * 0.4 <= e.value <= 1.4 * 0.4 for e in estimates]) >= 0.60


def test_estimate_rejects_bad_accuracy ():
    oracle = SimulatedOracle(uniform(2), seed=0)
    for eps in (0.0, 1.0, -0.2):
        with pytest.raises(InvalidParameter):
            sub_to_eval(oracle, eps, "01")


def test_point_estimate_value ():
    estimate = PointEstimate([100, 200], 50)
    assert estimate.value == pytest.approx(0.125)
    assert estimate.queries == 300
    assert estimate.export()["per_coordinate_trials"] == [100, 200]
    assert estimate.within(0.125, 0.01)


def test_median_amplify_examples ():
    assert median_amplify([3.0]) == 3.0
    assert median_amplify([1.0, 2.0, 100.0]) == 2.0
    assert median_amplify([1.0, 2.0, 3.0, 4.0]) == 2.0
    assert median_amplify([0.3, 0.1, 0.2]) == 0.2
    assert median_amplify([PointEstimate([4], 2), PointEstimate([2], 2), PointEstimate([8], 2)]) == 0.5


def test_expected_queries_uniform ():
    assert expected_queries(uniform(4), "0110", 0.5) == pytest.approx(512.0)


def test_expected_queries_skewed_product (skewed_product):
    assert expected_queries(skewed_product, "000", 0.5) == pytest.approx(720.0)


def test_expected_queries_zero_marginal ():
    with pytest.raises(InfiniteExpectation):
        expected_queries(point_mass("11"), "10", 0.5)


def test_expected_queries_under_uniform ():
    assert expected_queries_under(uniform(4), 0.5) == pytest.approx(2 * 4 * trials_for(4, 0.5))


def test_expected_queries_under_point_mass ():
    assert expected_queries_under(point_mass("101"), 0.5) == pytest.approx(3 * trials_for(3, 0.5))


def test_mean_queries_match_expectation (skewed_product):
    oracle = SimulatedOracle(skewed_product, seed=8)
    queries = [sub_to_eval(oracle, 0.5, "000").queries for _ in range(1000)]
    assert np.mean(queries) == pytest.approx(720.0, rel=0.05)


@pytest.mark.parametrize("size", [3, 4])
def test_expected_queries_under_hypergrid (size):
    assert expected_queries_under(uniform(2, size), 0.5) == pytest.approx(4.0 * size * 2 ** 2 / 0.25)
    model = random_model(types.EXPLICIT, 2, size, seed=size)
    assert expected_queries_under(model, 0.5) == pytest.approx(size * 2 * trials_for(2, 0.5))
