#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from .trials import run_trials
from .check import StatCheck, rate_check, check_success_rate, mean_check, check_mean, bound_check, count_check, \
    variance_check, pvalue_check
from .bench import BENCH_COLUMNS, bench, bench_slope
from .suite import SUITE, run_suite, accuracy_fixtures, expectation_fixtures
