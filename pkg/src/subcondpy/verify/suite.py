#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module holds the named validation suite. Every named check turns one
of the probabilistic guarantees of the estimators, the taming transform or
the tester into one or more pass or fail StatChecks on fixed fixtures.
All checks are seeded, and the scorecard of the suite is a pure function
of the seed.
'''

from functools import partial
from typing import Callable, Dict, List
import numpy as np
from ..maths import constants
from ..maths.stats import chi_square_pvalue, variance_standard_error
from ..maths.utils import relative_variance
from ..models import DistributionModel, ExplicitDistribution, ProductDistribution, ChainDistribution, \
    uniform, point_mass, random_model, exact_tv
from ..estimator import negative_binomial_count, sub_to_eval, expected_queries, expected_queries_under
from ..oracle import SimulatedOracle, draw_symbols
from ..taming import TamedOracle, tame_exact, marginal_floor
from ..tester import TesterConfig, run_sub_vs_sub, distance_estimate, estimate_accuracy, required_samples, \
    noisy_evaluator
from ..utils import printer, types, helper, InvalidParameter
from .bench import bench, bench_slope
from .check import StatCheck, check_success_rate, check_mean, mean_check, variance_check, bound_check, \
    count_check, pvalue_check
from .trials import run_trials


def _chain_fixture () -> ChainDistribution:
    return ChainDistribution([0.4, 0.6], [[[0.7, 0.3], [0.2, 0.8]], [[0.5, 0.5], [0.1, 0.9]]])

def _table_fixture () -> ExplicitDistribution:
    return ExplicitDistribution([0.1, 0.2, 0.3, 0.4])

def accuracy_fixtures () -> list:
    '''
    Returns the fixtures of the evaluator accuracy check as tuples of a
    label, a model, a string and an accuracy. Every marginal along each
    string is at least 0.1.

    :returns:   The fixtures
    :rtype:     list
    '''

    return [
        ("explicit-n2", _table_fixture(), "11", 0.4),
        ("uniform-n2", uniform(2), "01", 0.45),
        ("product-n3", ProductDistribution([[0.3, 0.7], [0.6, 0.4], [0.2, 0.8]]), "101", 0.4),
        ("chain-n3", _chain_fixture(), "011", 0.45),
        ("product-n4", ProductDistribution([[0.5, 0.5], [0.4, 0.6], [0.7, 0.3], [0.5, 0.5]]), "0110", 0.4),
        ("grid-n2", ProductDistribution([[0.2, 0.3, 0.5], [0.5, 0.3, 0.2]]), "21", 0.4),
    ]

def expectation_fixtures () -> list:
    '''
    Returns the fixtures of the expected queries check as tuples of a
    label, a model, a string and an accuracy.

    :returns:   The fixtures
    :rtype:     list
    '''

    return [
        ("uniform-n4", uniform(4), "0110", 0.5),
        ("skewed-product-n3", ProductDistribution([[0.2, 0.8]] * 3), "000", 0.5),
        ("chain-n3", _chain_fixture(), "011", 0.5),
        ("explicit-n2", _table_fixture(), "00", 0.5),
    ]


# Trial functions are module level so that they can be sent to worker processes

def _nb_trial (index: int, p: float, k: int, seed: int) -> int:
    oracle = SimulatedOracle(ProductDistribution([[p, 1.0 - p]]), seed=helper.derive_seed(seed, index))
    return negative_binomial_count(oracle, (), 0, k)

def _accuracy_trial (index: int, model: DistributionModel, sigma: str, eps: float, seed: int) -> bool:
    oracle = SimulatedOracle(model, seed=helper.derive_seed(seed, index))
    return sub_to_eval(oracle, eps, sigma).within(model.point_probability(sigma), eps)

def _queries_trial (index: int, model: DistributionModel, sigma: str, eps: float, seed: int) -> int:
    oracle = SimulatedOracle(model, seed=helper.derive_seed(seed, index))
    if sigma is None:
        sigma = model.sample_exact(oracle.generator)
    return sub_to_eval(oracle, eps, sigma).queries

def _product_trial (index: int, model: DistributionModel, sigma: str, eps: float, seed: int) -> float:
    oracle = SimulatedOracle(model, seed=helper.derive_seed(seed, index))
    return 1.0 / sub_to_eval(oracle, eps, sigma).value

def _tester_trial (index: int, p_model: DistributionModel, q_model: DistributionModel, eps1: float, eps2: float,
        config: TesterConfig, seed: int) -> tuple:
    report = run_sub_vs_sub(p_model, q_model, eps1, eps2, config, helper.derive_seed(seed, index))
    return (report.verdict, report.budget_exceeded, report.queries <= report.params.budget)

def _presampled (model: DistributionModel, m: int, generator: np.random.Generator) -> Callable:
    '''
    Returns a sampler that yields m strings of a model drawn in one batch.
    '''

    shape = (model.alphabet.size,) * model.n
    indices = iter(draw_symbols(model.probability_table().reshape(-1), m, generator))
    return lambda: np.unravel_index(next(indices), shape)


def check_nb_moments (seed: int = 0, workers: int = 1, trials: int = 10000) -> List[StatCheck]:
    '''
    Checks that the trial counts until k successes have mean k/p within
    three standard errors and variance k(1-p)/p² within 10%.
    '''

    checks = []
    for index, (k, p) in enumerate([(64, 0.5), (32, 0.25)]):
        counts = run_trials(partial(_nb_trial, p=p, k=k, seed=helper.derive_seed(seed, index)), trials, workers)
        checks.append(mean_check(f"nb-moments-mean-k{k}-p{p}", counts, k / p, 0.0))
        checks.append(variance_check(f"nb-moments-variance-k{k}-p{p}", counts, k * (1.0 - p) / (p * p), 0.1))
    return checks

def check_sub_to_eval_accuracy (seed: int = 0, workers: int = 1, trials: int = 500) -> List[StatCheck]:
    '''
    Checks that a point estimate lies within (1±ε) of the truth with
    probability at least 2/3 on every accuracy fixture.
    '''

    checks = []
    for index, (label, model, sigma, eps) in enumerate(accuracy_fixtures()):
        trial = partial(_accuracy_trial, model=model, sigma=sigma, eps=eps, seed=helper.derive_seed(seed, index))
        checks.append(check_success_rate(trial, constants.SUCCESS_PROBABILITY_EVAL, trials,
            name=f"sub-to-eval-accuracy-{label}", workers=workers))
    return checks

def check_expected_queries (seed: int = 0, workers: int = 1, trials: int = 1000) -> List[StatCheck]:
    '''
    Checks that the mean queries of the point evaluator match the exact
    expectation within 5%, on fixed strings and on strings drawn from the
    model itself.
    '''

    checks = []
    for index, (label, model, sigma, eps) in enumerate(expectation_fixtures()):
        trial = partial(_queries_trial, model=model, sigma=sigma, eps=eps, seed=helper.derive_seed(seed, index))
        checks.append(check_mean(trial, expected_queries(model, sigma, eps), 0.05, trials,
            name=f"expected-queries-{label}", workers=workers))
    for index, model in enumerate([uniform(4), ProductDistribution([[0.2, 0.8]] * 3)]):
        trial = partial(_queries_trial, model=model, sigma=None, eps=0.5, seed=helper.derive_seed(seed, 100 + index))
        checks.append(check_mean(trial, expected_queries_under(model, 0.5), 0.05, trials,
            name=f"expected-queries-sampled-n{model.n}-{index}", workers=workers))
    return checks

def check_relative_variance (seed: int = 0, workers: int = 1, trials: int = 10000) -> List[StatCheck]:
    '''
    Checks that the relative variance of the product of x_j/k is at most
    ε²/3, up to three standard errors.
    '''

    checks = []
    fixtures = [("skewed-product-n3", ProductDistribution([[0.2, 0.8]] * 3), "000", 0.5),
        ("explicit-n2", _table_fixture(), "11", 0.4)]
    for index, (label, model, sigma, eps) in enumerate(fixtures):
        trial = partial(_product_trial, model=model, sigma=sigma, eps=eps, seed=helper.derive_seed(seed, index))
        values = np.asarray(run_trials(trial, trials, workers))
        mean = float(values.mean())
        checks.append(bound_check(f"relative-variance-{label}", trials, relative_variance(values),
            eps * eps / 3.0, 3.0 * variance_standard_error(values) / (mean * mean)))
    return checks

def check_taming_tv_bound (seed: int = 0, workers: int = 1, models: int = 20) -> List[StatCheck]:
    '''
    Checks on seeded random models with n from 1 to 6 that the tamed model
    is within θn of the model and respects the marginal floor, for θ in
    0.01, 0.05 and 0.1 over both the hypercube and the hypergrid.
    '''

    cases, bounded, floored = 0, 0, 0
    for mode, size in ((types.HYPERCUBE, 2), (types.HYPERGRID, 3)):
        for index in range(models):
            model = random_model(types.EXPLICIT, 1 + index % 6, size, helper.derive_seed(seed, 1000 * size + index))
            for theta in (0.01, 0.05, 0.1):
                tamed = tame_exact(model, theta, mode)
                low, high = tamed.marginal_range()
                floor_low, floor_high = marginal_floor(theta, mode, size)
                cases += 1
                bounded += exact_tv(model, tamed) <= theta * model.n + constants.TV_TOLERANCE
                floored += low >= floor_low - constants.FLOOR_TOLERANCE and high <= floor_high + constants.FLOOR_TOLERANCE
    return [
        count_check("taming-tv-bound", bounded, cases, cases),
        count_check("taming-marginal-floor", floored, cases, cases),
    ]

def check_tamed_wrapper_agreement (seed: int = 0, workers: int = 1, trials: int = 20000) -> List[StatCheck]:
    '''
    Checks with a chi-square test at significance 0.01 that full strings
    drawn through the tamed oracle follow the exactly tamed model.
    '''

    fixtures = [
        ("explicit-n2", _table_fixture(), 0.1, types.HYPERCUBE),
        ("point-n3", point_mass("101"), 0.25, types.HYPERCUBE),
        ("chain-n3", _chain_fixture(), 0.05, types.HYPERCUBE),
        ("random-n3", random_model(types.EXPLICIT, 3, 2, helper.derive_seed(seed, 7)), 0.1, types.HYPERCUBE),
        ("grid-n2", ProductDistribution([[0.2, 0.3, 0.5], [0.5, 0.3, 0.2]]), 0.2, types.HYPERGRID),
    ]
    checks = []
    for index, (label, model, theta, mode) in enumerate(fixtures):
        oracle = TamedOracle(SimulatedOracle(model, seed=helper.derive_seed(seed, index)), theta, mode)
        shape = (model.alphabet.size,) * model.n
        counts = np.zeros(model.domain_size)
        for _ in range(trials):
            counts[np.ravel_multi_index(oracle.sample_full(), shape)] += 1
        expected = tame_exact(model, theta, mode).probability_table().reshape(-1)
        checks.append(pvalue_check(f"tamed-wrapper-agreement-{label}", trials, chi_square_pvalue(counts, expected)))
    return checks

def check_distance_estimate (seed: int = 0, workers: int = 1, runs: int = 100) -> List[StatCheck]:
    '''
    Checks the distance estimate on uniform against a point mass over
    {0,1}^2, in both directions, where the distance is 0.75. With exact
    evaluators and m = 2000 the estimate is within 0.05 in at least 95 of
    100 runs; with evaluators of 5% noise and m from the sample formula at
    δ = 0.1 it is within the accuracy bound in at least 90 of 100 runs.
    '''

    checks = []
    pairs = [("uniform-vs-point", uniform(2), point_mass("00")), ("point-vs-uniform", point_mass("00"), uniform(2))]
    noise = 0.05
    noisy_m = required_samples(noise, noise, 0.1)
    accuracy = estimate_accuracy(noise, noise)
    for index, (label, p, q) in enumerate(pairs):
        truth = exact_tv(p, q)
        exact_hits, noisy_hits = 0, 0
        for run in range(runs):
            generator = helper.create_generator(helper.derive_seed(helper.derive_seed(seed, index), run))
            z = distance_estimate(_presampled(q, 2000, generator), p.point_probability, q.point_probability, 2000)
            exact_hits += abs(z - truth) <= 0.05
            z = distance_estimate(_presampled(q, noisy_m, generator), noisy_evaluator(p.point_probability, noise, generator),
                noisy_evaluator(q.point_probability, noise, generator), noisy_m)
            noisy_hits += abs(z - truth) <= accuracy
        checks.append(count_check(f"distance-estimate-exact-{label}", exact_hits, runs, int(np.ceil(0.95 * runs))))
        checks.append(count_check(f"distance-estimate-noisy-{label}", noisy_hits, runs, int(np.ceil(0.90 * runs))))
    return checks

def check_end_to_end (seed: int = 0, workers: int = 1, runs: int = 20) -> List[StatCheck]:
    '''
    Checks the verdicts of the tester under the engineering profile: equal
    uniform distributions are accepted and uniform against a point mass is
    rejected in at least 60% of the runs, over the hypercube and the
    hypergrid, and no run ever spends more than its budget.
    '''

    config = TesterConfig.engineering()
    scenarios = [
        ("accept-uniform-n3", uniform(3), uniform(3), 0.2, 0.8, types.ACCEPT),
        ("reject-point-n3", uniform(3), point_mass("000"), 0.1, 0.6, types.REJECT),
        ("accept-grid-n2", uniform(2, 3), uniform(2, 3), 0.2, 0.8, types.ACCEPT),
        ("reject-grid-point-n2", uniform(2, 3), point_mass("00", 3), 0.1, 0.6, types.REJECT),
    ]
    checks = []
    minimum = int(np.ceil(constants.SUCCESS_PROBABILITY_TEST * runs))
    for index, (label, p, q, eps1, eps2, expected) in enumerate(scenarios):
        trial = partial(_tester_trial, p_model=p, q_model=q, eps1=eps1, eps2=eps2, config=config,
            seed=helper.derive_seed(seed, index))
        results = run_trials(trial, runs, workers)
        checks.append(count_check(f"end-to-end-{label}", sum(verdict == expected for verdict, _, _ in results), runs, minimum))
        checks.append(count_check(f"end-to-end-{label}-within-budget", sum(within for _, _, within in results), runs, runs))
    return checks

def check_query_scaling (seed: int = 0, workers: int = 1, runs: int = 3) -> List[StatCheck]:
    '''
    Checks that the mean queries of the engineering profile grow no faster
    than n^3.3 over n in 2, 3 and 4.
    '''

    table = bench([2, 3, 4], 0.3, TesterConfig.engineering(), seed, runs, workers=workers)
    return [bound_check("query-scaling-slope", runs * len(table), bench_slope(table), 3.0, 0.3)]


SUITE: Dict[str, Callable] = {
    "nb-moments": check_nb_moments,
    "sub-to-eval-accuracy": check_sub_to_eval_accuracy,
    "expected-queries": check_expected_queries,
    "relative-variance": check_relative_variance,
    "taming-tv-bound": check_taming_tv_bound,
    "tamed-wrapper-agreement": check_tamed_wrapper_agreement,
    "distance-estimate": check_distance_estimate,
    "end-to-end": check_end_to_end,
    "query-scaling": check_query_scaling,
}
'''The named checks of the validation suite, in the order they are run.'''


def run_suite (names: List[str] = None, seed: int = 0, workers: int = 1) -> dict:
    '''
    Runs named checks of the suite and gathers their results in a
    scorecard with the seed, every check and whether all of them passed.

    :param names:   The names of the checks, or None for the whole suite
    :type names:    List[str]
    :param seed:    The seed of the suite
    :type seed:     int
    :param workers: The number of worker processes
    :type workers:  int

    :returns:       The scorecard
    :rtype:         dict
    '''

    names = list(SUITE.keys()) if not names else list(names)
    unknown = [name for name in names if name not in SUITE]
    if len(unknown) > 0:
        raise InvalidParameter(f"Unknown checks {unknown}; expected names from {list(SUITE.keys())}.")

    # Each check is seeded by its place in the suite, not in the selection
    order = list(SUITE.keys())
    checks = []
    for name in names:
        printer.log(f"Running the check '{name}'.")
        checks.extend(SUITE[name](seed=helper.derive_seed(seed, order.index(name)), workers=workers))
    passed = all(check.passed for check in checks)
    return {
        "seed": seed,
        "checks": [check.export() for check in checks],
        "passed": passed,
    }
