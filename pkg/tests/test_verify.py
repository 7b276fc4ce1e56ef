#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from functools import partial
import numpy as np
import pandas as pd
import pytest
from subcondpy.tester import TesterConfig
from subcondpy.utils import helper, InvalidParameter
from subcondpy.verify import run_trials, rate_check, check_success_rate, check_mean, mean_check, bound_check, \
    count_check, variance_check, pvalue_check, bench, bench_slope, run_suite, accuracy_fixtures, \
    expectation_fixtures, BENCH_COLUMNS, SUITE
from subcondpy.verify.suite import _nb_trial


def test_run_trials_in_order ():
    assert run_trials(lambda index: index * index, 5) == [0, 1, 4, 9, 16]


def test_run_trials_same_over_workers ():
    trial = partial(_nb_trial, p=0.5, k=8, seed=3)
    assert run_trials(trial, 24, workers=2) == run_trials(trial, 24, workers=1)


def test_run_trials_validation ():
    with pytest.raises(InvalidParameter):
        run_trials(lambda index: index, 0)
    with pytest.raises(InvalidParameter):
        run_trials(lambda index: index, 3, workers=0)


def test_success_rate_always_true ():
    check = check_success_rate(lambda index: True, 2.0 / 3.0, 300)
    assert check.passed
    assert check.observed == 1.0


def test_success_rate_always_false ():
    assert not check_success_rate(lambda index: False, 2.0 / 3.0, 300)


def test_success_rate_of_likely_trials ():
    generator = np.random.default_rng(31)
    draws = generator.random(300) < 0.9
    assert check_success_rate(lambda index: bool(draws[index]), 2.0 / 3.0, 300).passed


def test_success_rate_needs_trials ():
    with pytest.raises(InvalidParameter):
        check_success_rate(lambda index: True, 2.0 / 3.0, 50)


def test_rate_check_margin_favours_claim ():
    check = rate_check("near", 190, 300, 2.0 / 3.0)
    assert check.observed < 2.0 / 3.0
    assert check.passed
    assert check.export()["kind"] == "rate"


def test_mean_check_constant ():
    check = check_mean(lambda index: 512, 512.0, 0.05, 20)
    assert check.passed
    assert check.margin == pytest.approx(0.05 * 512.0)


def test_mean_check_fails_far_claim ():
    assert not mean_check("far", [100.0] * 50, 512.0, 0.05)


def test_bound_count_variance_fit ():
    assert bound_check("slope", 9, 3.2, 3.0, 0.3)
    assert not bound_check("slope", 9, 3.4, 3.0, 0.3)
    assert count_check("count", 120, 120, 120)
    assert not count_check("count", 11, 20, 12)
    assert variance_check("variance", [1.0, 3.0] * 50, 1.0, 0.1)
    assert not variance_check("variance", [1.0, 3.0] * 50, 2.0, 0.1)
    assert not pvalue_check("fit", 100, 0.001)


def test_check_export_fields ():
    exported = count_check("count", 12, 20, 12).export()
    assert set(exported) == {"name", "kind", "trials", "observed", "claimed", "margin", "pass"}
    assert exported["pass"] is True


def test_fixtures_have_positive_truth ():
    for _, model, sigma, eps in accuracy_fixtures() + expectation_fixtures():
        assert model.point_probability(sigma) > 0.0
        assert 0.0 < eps < 0.5


def test_bench_table ():
    config = TesterConfig.engineering(m_scale=0.02, t_scale=0.01, k_scale=0.005)
    table = bench([2, 3], 0.3, config, seed=1, runs=1)
    assert list(table.columns) == BENCH_COLUMNS
    assert list(table["n"]) == [2, 3]
    assert (table["mean_queries"] > 0).all()
    assert (table["mean_queries"] <= table["M"]).all()


def test_bench_validation ():
    with pytest.raises(InvalidParameter):
        bench([2], 0.7)
    with pytest.raises(InvalidParameter):
        bench([], 0.3)


def test_bench_slope ():
    table = pd.DataFrame({"n": [2, 3, 4], "gamma": 0.3, "mean_queries": [8.0, 27.0, 64.0], "M": 1000})
    assert bench_slope(table) == pytest.approx(3.0)


def test_suite_names ():
    assert list(SUITE) == ["nb-moments", "sub-to-eval-accuracy", "expected-queries", "relative-variance",
        "taming-tv-bound", "tamed-wrapper-agreement", "distance-estimate", "end-to-end", "query-scaling"]


def test_suite_taming_check ():
    scorecard = run_suite(["taming-tv-bound"], seed=0)
    assert scorecard["passed"]
    assert [check["name"] for check in scorecard["checks"]] == ["taming-tv-bound", "taming-marginal-floor"]
    assert scorecard["checks"][0]["trials"] == 120


def test_suite_is_seeded ():
    assert run_suite(["nb-moments"], seed=4) == run_suite(["nb-moments"], seed=4)


def test_suite_unknown_check ():
    with pytest.raises(InvalidParameter):
        run_suite(["nonsense"])


@pytest.mark.slow
@pytest.mark.parametrize("name", ["sub-to-eval-accuracy", "expected-queries", "relative-variance",
    "tamed-wrapper-agreement", "distance-estimate"])
def test_suite_component_checks (name):
    scorecard = run_suite([name], seed=0, workers=2)
    assert scorecard["passed"], helper.to_json(scorecard)


@pytest.mark.slow
def test_suite_end_to_end ():
    assert run_suite(["end-to-end", "query-scaling"], seed=0, workers=2)["passed"]
