#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module measures how the queries of the tolerant tester grow with
the dimension. Each configuration runs the tester on the uniform
distribution against itself, with ε1 = 1/2 - γ and ε2 = 1/2 + γ, and the
mean of the queries over a few seeded runs is reported next to the budget.
'''

from functools import partial
from typing import List
import numpy as np
import pandas as pd
from ..maths.stats import log_log_slope
from ..models import uniform
from ..tester import TesterConfig, run_sub_vs_sub
from ..utils import printer, helper, InvalidParameter
from .trials import run_trials


BENCH_COLUMNS: List[str] = ["n", "gamma", "mean_queries", "M"]
'''The columns of the benchmark table, in order.'''


def _bench_trial (index: int, n: int, gamma: float, alphabet: int, config: TesterConfig, seed: int) -> tuple:
    model = uniform(n, alphabet)
    report = run_sub_vs_sub(model, model, 0.5 - gamma, 0.5 + gamma, config, helper.derive_seed(seed, index))
    return (report.queries, report.params.budget)

def bench (ns: List[int], gamma: float = 0.3, config: TesterConfig = None, seed: int = 0, runs: int = 3,
        alphabet: int = 2, workers: int = 1) -> pd.DataFrame:
    '''
    Runs the benchmark over a grid of dimensions at a fixed gap.

    :param ns:          The dimensions of the grid
    :type ns:           List[int]
    :param gamma:       The gap γ, in (0, 1/2]
    :type gamma:        float
    :param config:      The tester configuration; defaults to the engineering profile
    :type config:       TesterConfig
    :param seed:        The seed of the benchmark
    :type seed:         int
    :param runs:        The number of runs per configuration
    :type runs:         int
    :param alphabet:    The alphabet size
    :type alphabet:     int
    :param workers:     The number of worker processes
    :type workers:      int

    :returns:           One row per dimension with the columns n, gamma, mean_queries and M
    :rtype:             pd.DataFrame
    '''

    gamma = float(gamma)
    if not (0.0 < gamma <= 0.5):
        raise InvalidParameter(f"The benchmark gap must lie in (0, 1/2], got {gamma}.")
    if len(ns) == 0:
        raise InvalidParameter("The benchmark needs at least one dimension.")
    config = TesterConfig.engineering() if config is None else config

    rows = []
    for index, n in enumerate(ns):
        trial = partial(_bench_trial, n=int(n), gamma=gamma, alphabet=alphabet, config=config,
            seed=helper.derive_seed(seed, index))
        results = run_trials(trial, runs, workers)
        rows.append({
            "n": int(n),
            "gamma": gamma,
            "mean_queries": float(np.mean([queries for queries, _ in results])),
            "M": int(results[0][1]),
        })
        printer.log(f"Benchmark n = {n}: {rows[-1]['mean_queries']:.1f} mean queries against M = {rows[-1]['M']}.")
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)

def bench_slope (table: pd.DataFrame) -> float:
    '''
    Returns the slope of log mean queries against log n over a benchmark.

    :param table:   The benchmark table
    :type table:    pd.DataFrame

    :returns:       The scaling exponent in n
    :rtype:         float
    '''

    return log_log_slope(table["n"].to_numpy(), table["mean_queries"].to_numpy())
