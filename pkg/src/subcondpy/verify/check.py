#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from typing import Callable
import numpy as np
from ..maths.stats import wilson_interval, standard_error
from ..utils import printer, helper, InvalidParameter
from .trials import run_trials


RATE: str = "rate"
'''A check of a success probability against a claimed lower bound.'''

MEAN: str = "mean"
'''A check of an expectation against a claimed value.'''

BOUND: str = "bound"
'''A check of an observed quantity against a claimed upper bound.'''

COUNT: str = "count"
'''A check that at least a number of cases out of a total succeeded.'''

VARIANCE: str = "variance"
'''A check of a variance against a claimed value.'''

FIT: str = "fit"
'''A goodness-of-fit check, whose observed value is a p-value.'''

MINIMUM_RATE_TRIALS: int = 100
'''The fewest trials a rate check accepts.'''


class StatCheck:
    '''
    The StatCheck is the outcome of one statistical check of a claimed
    guarantee. It records the number of trials, the observed rate or mean,
    the claim, the margin applied and whether the check passed. Margins are
    always applied in favour of the claim, so that a true claim fails a
    check with probability at most one minus the confidence.
    '''

    name: str = ""
    '''Defines the name of the check.'''

    kind: str = RATE
    '''Defines the kind of the check, such as rate or mean.'''

    trials: int = 0
    '''Defines the number of trials.'''

    observed: float = 0.0
    '''Defines the observed rate, mean or quantity.'''

    claimed: float = 0.0
    '''Defines the claimed bound or value.'''

    margin: float = 0.0
    '''Defines the margin applied in favour of the claim.'''

    passed: bool = False
    '''Defines whether the claim survived the check.'''

    def __init__ (self, name: str, kind: str, trials: int, observed: float, claimed: float, margin: float, passed: bool) -> None:
        self.name = name
        self.kind = kind
        self.trials = int(trials)
        self.observed = float(observed)
        self.claimed = float(claimed)
        self.margin = float(margin)
        self.passed = bool(passed)
        if self.passed:
            printer.success(f"Check '{name}' passed: observed {self.observed:.6g} against {self.claimed:.6g}.")
        else:
            printer.warning(f"Check '{name}' failed: observed {self.observed:.6g} against {self.claimed:.6g}.")

    def export (self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "trials": self.trials,
            "observed": self.observed,
            "claimed": self.claimed,
            "margin": self.margin,
            "pass": self.passed,
        }

    def __bool__ (self) -> bool:
        return self.passed

    def __str__ (self) -> str:
        return helper.to_json(self.export())

    def __repr__ (self) -> str:
        return f"StatCheck({self.name!r}, passed={self.passed})"


def rate_check (name: str, successes: int, trials: int, p_claimed: float, confidence: float = 0.99) -> StatCheck:
    '''
    Checks counted successes against a claimed success probability. The
    claim passes unless the upper end of the Wilson interval at the given
    confidence falls below it.

    :param name:        The name of the check
    :type name:         str
    :param successes:   The number of successes
    :type successes:    int
    :param trials:      The number of trials
    :type trials:       int
    :param p_claimed:   The claimed lower bound on the success probability
    :type p_claimed:    float
    :param confidence:  The two-sided confidence of the interval
    :type confidence:   float

    :returns:           The check
    :rtype:             StatCheck
    '''

    _, upper = wilson_interval(successes, trials, confidence)
    observed = successes / trials
    return StatCheck(name, RATE, trials, observed, p_claimed, upper - observed, upper >= p_claimed)

def check_success_rate (trial_fn: Callable, p_claimed: float, trials: int, confidence: float = 0.99,
        name: str = "success-rate", workers: int = 1) -> StatCheck:
    '''
    Runs a trial function that returns whether a trial succeeded and checks
    the success rate against a claimed lower bound with a Wilson interval.

    :param trial_fn:    The trial function, called with the trial index
    :type trial_fn:     Callable
    :param p_claimed:   The claimed lower bound on the success probability
    :type p_claimed:    float
    :param trials:      The number of trials, at least 100
    :type trials:       int
    :param confidence:  The two-sided confidence of the interval
    :type confidence:   float
    :param name:        The name of the check
    :type name:         str
    :param workers:     The number of worker processes
    :type workers:      int

    :returns:           The check
    :rtype:             StatCheck
    '''

    if trials < MINIMUM_RATE_TRIALS:
        raise InvalidParameter(f"A success rate check needs at least {MINIMUM_RATE_TRIALS} trials, got {trials}.")
    successes = sum(bool(result) for result in run_trials(trial_fn, trials, workers))
    return rate_check(name, successes, trials, p_claimed, confidence)

def mean_check (name: str, values: any, mean_claimed: float, rel_tol: float) -> StatCheck:
    '''
    Checks a sample against a claimed expectation. The check passes if the
    sample mean is within rel_tol times the claim plus three standard
    errors of it.

    :param name:            The name of the check
    :type name:             str
    :param values:          The sample
    :type values:           any
    :param mean_claimed:    The claimed expectation
    :type mean_claimed:     float
    :param rel_tol:         The relative tolerance
    :type rel_tol:          float

    :returns:               The check
    :rtype:                 StatCheck
    '''

    values = np.asarray(values, dtype=np.float64)
    observed = float(values.mean())
    margin = rel_tol * abs(mean_claimed) + 3.0 * standard_error(values)
    return StatCheck(name, MEAN, values.size, observed, mean_claimed, margin, abs(observed - mean_claimed) <= margin)

def check_mean (trial_fn: Callable, mean_claimed: float, rel_tol: float, trials: int,
        name: str = "mean", workers: int = 1) -> StatCheck:
    '''
    Runs a trial function that returns a number and checks the mean of the
    results against a claimed expectation.

    :param trial_fn:        The trial function, called with the trial index
    :type trial_fn:         Callable
    :param mean_claimed:    The claimed expectation
    :type mean_claimed:     float
    :param rel_tol:         The relative tolerance
    :type rel_tol:          float
    :param trials:          The number of trials
    :type trials:           int
    :param name:            The name of the check
    :type name:             str
    :param workers:         The number of worker processes
    :type workers:          int

    :returns:               The check
    :rtype:                 StatCheck
    '''

    return mean_check(name, run_trials(trial_fn, trials, workers), mean_claimed, rel_tol)

def bound_check (name: str, trials: int, observed: float, bound: float, margin: float) -> StatCheck:
    '''
    Checks an observed quantity against a claimed upper bound, allowing the
    margin above it.

    :param name:        The name of the check
    :type name:         str
    :param trials:      The number of trials behind the quantity
    :type trials:       int
    :param observed:    The observed quantity
    :type observed:     float
    :param bound:       The claimed upper bound
    :type bound:        float
    :param margin:      The slack allowed above the bound
    :type margin:       float

    :returns:           The check
    :rtype:             StatCheck
    '''

    return StatCheck(name, BOUND, trials, observed, bound, margin, observed <= bound + margin)

def count_check (name: str, successes: int, total: int, minimum: int) -> StatCheck:
    '''
    Checks that at least a minimum number of cases out of a total succeeded.

    :param name:        The name of the check
    :type name:         str
    :param successes:   The number of successful cases
    :type successes:    int
    :param total:       The number of cases
    :type total:        int
    :param minimum:     The fewest successes required
    :type minimum:      int

    :returns:           The check
    :rtype:             StatCheck
    '''

    return StatCheck(name, COUNT, total, successes, minimum, 0.0, successes >= minimum)

def variance_check (name: str, values: any, variance_claimed: float, rel_tol: float) -> StatCheck:
    '''
    Checks the sample variance against a claimed variance, within a
    relative tolerance of the claim.

    :param name:                The name of the check
    :type name:                 str
    :param values:              The sample
    :type values:               any
    :param variance_claimed:    The claimed variance
    :type variance_claimed:     float
    :param rel_tol:             The relative tolerance
    :type rel_tol:              float

    :returns:                   The check
    :rtype:                     StatCheck
    '''

    values = np.asarray(values, dtype=np.float64)
    observed = float(values.var(ddof=1))
    margin = rel_tol * abs(variance_claimed)
    return StatCheck(name, VARIANCE, values.size, observed, variance_claimed, margin, abs(observed - variance_claimed) <= margin)

def pvalue_check (name: str, trials: int, pvalue: float, significance: float = 0.01) -> StatCheck:
    '''
    Checks that a goodness-of-fit test does not reject at a significance.

    :param name:            The name of the check
    :type name:             str
    :param trials:          The number of draws behind the test
    :type trials:           int
    :param pvalue:          The p-value of the test
    :type pvalue:           float
    :param significance:    The significance level
    :type significance:     float

    :returns:               The check
    :rtype:                 StatCheck
    '''

    return StatCheck(name, FIT, trials, pvalue, significance, 0.0, pvalue >= significance)
