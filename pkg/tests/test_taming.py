#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import itertools
import numpy as np
import pytest
from scipy.stats import chisquare
from subcondpy import SimulatedOracle, TamedOracle, ProductDistribution, uniform, point_mass, random_model, \
    exact_tv, tame_exact
from subcondpy.taming import default_mode, tamed_vector, tamed_point_probability, marginal_floor, tame_check
from subcondpy.oracle import Alphabet
from subcondpy.utils import types, InvalidParameter


def test_default_mode ():
    assert default_mode(Alphabet(2)) == types.HYPERCUBE
    assert default_mode(Alphabet(3)) == types.HYPERGRID


def test_tamed_vector_hypergrid ():
    assert np.allclose(tamed_vector([1.0, 0.0, 0.0], 0.3, types.HYPERGRID), [0.8, 0.1, 0.1])


def test_tamed_vector_hypercube ():
    assert np.allclose(tamed_vector([1.0, 0.0], 0.25, types.HYPERCUBE), [0.75, 0.25])
    assert np.allclose(tamed_vector([0.5, 0.5], 0.4, types.HYPERCUBE), [0.5, 0.5])


def test_tamed_point_mass_frequency ():
    oracle = TamedOracle(SimulatedOracle(point_mass("0"), seed=2), 0.25)
    draws = oracle.sample_next_many((), 10000)
    assert abs(np.mean(draws == 0) - 0.75) <= 0.02


def test_tamed_uniform_is_fixed ():
    oracle = TamedOracle(SimulatedOracle(uniform(2), seed=3), 0.3)
    draws = oracle.sample_next_many("1", 10000)
    assert abs(draws.mean() - 0.5) <= 0.02


def test_tamed_oracle_charges_only_delegated_draws ():
    inner = SimulatedOracle(uniform(2), seed=4)
    oracle = TamedOracle(inner, 0.25)
    oracle.sample_next_many((), 10000)
    assert oracle.meter is inner.meter
    assert abs(inner.meter.count - 5000) <= 300


def test_tamed_full_strings_follow_tamed_model (chain_model):
    oracle = TamedOracle(SimulatedOracle(chain_model, seed=5), 0.1)
    counts = np.zeros(8)
    for _ in range(5000):
        counts[np.ravel_multi_index(oracle.sample_full(), (2, 2, 2))] += 1
    expected = tame_exact(chain_model, 0.1).probability_table().reshape(-1) * 5000
    _, pvalue = chisquare(counts, expected)
    assert pvalue > 0.001


def test_taming_validation ():
    with pytest.raises(InvalidParameter):
        TamedOracle(SimulatedOracle(uniform(2, 3), seed=0), 0.1, types.HYPERCUBE)
    for theta in (0.0, 0.5, -0.1):
        with pytest.raises(InvalidParameter):
            TamedOracle(SimulatedOracle(uniform(2), seed=0), theta)


def test_tame_exact_point_mass ():
    model = point_mass("0")
    tamed = tame_exact(model, 0.25)
    assert np.allclose(tamed.probability_table(), [0.75, 0.25])
    assert exact_tv(model, tamed) == pytest.approx(0.25)


def test_tame_exact_random_model_bound ():
    model = random_model(types.EXPLICIT, 4, 2, seed=17)
    assert exact_tv(model, tame_exact(model, 0.05)) <= 0.2 + 1e-9


def test_tamed_point_probability_matches_table (table_model):
    tamed = tame_exact(table_model, 0.1)
    for string in itertools.product(range(2), repeat=2):
        assert tamed_point_probability(table_model, string, 0.1) == pytest.approx(tamed.point_probability(string))


def test_marginal_floor ():
    assert marginal_floor(0.2, types.HYPERCUBE, 2) == pytest.approx((0.2, 0.8))
    assert marginal_floor(0.3, types.HYPERGRID, 3) == pytest.approx((0.1, 0.8))


def test_tame_check_examples ():
    result = tame_check(point_mass("0"), 0.25)
    assert result["tv"] == pytest.approx(0.25)
    assert result["pass"]
    result = tame_check(uniform(3), 0.1)
    assert result["tv"] == pytest.approx(0.0, abs=1e-12)
    assert result["pass"]


@pytest.mark.parametrize("size,mode", [(2, types.HYPERCUBE), (3, types.HYPERGRID), (2, types.HYPERGRID)])
def test_tame_check_random_models (size, mode):
    for seed in range(5):
        model = random_model(types.EXPLICIT, 1 + seed, size, seed)
        result = tame_check(model, 0.05, mode)
        assert result["pass"]
        assert result["tv"] <= 0.05 * model.n + 1e-9


def test_tame_check_product_over_grid ():
    model = ProductDistribution([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    result = tame_check(model, 0.3)
    assert result["mode"] == types.HYPERGRID
    assert result["marginal_min"] == pytest.approx(0.1)
    assert result["pass"]


def test_taming_twice_keeps_floor ():
    model = random_model(types.EXPLICIT, 3, 2, seed=12)
    twice = tame_exact(tame_exact(model, 0.1), 0.1)
    low, high = twice.marginal_range()
    assert low >= 0.1 - 1e-12
    assert high <= 0.9 + 1e-12
