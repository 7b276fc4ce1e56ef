#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module implements the point evaluator, which estimates the
probability of a full string through prefix conditional sampling. Each
coordinate is estimated by counting the draws needed to see the target
symbol k times, and the estimate of the string is the product of k/x_j.
'''

import numpy as np
from ..maths import constants
from ..maths.stats import lower_median
from ..maths.utils import ceil_int
from ..oracle import SubcondOracle, as_string
from ..utils import helper, printer, NonterminationSuspected
from .estimate import PointEstimate


def trials_for (n: int, eps: float) -> int:
    '''
    Returns the number of successes k = ceil(4n/ε²) required per
    coordinate for a (1±ε) estimate of a string of dimension n.

    :param n:   The dimension of the strings
    :type n:    int
    :param eps: The relative accuracy
    :type eps:  float

    :returns:   The number of successes per coordinate
    :rtype:     int
    '''

    return ceil_int(constants.EVAL_SAMPLES_FACTOR * n / (eps * eps))

def negative_binomial_count (oracle: SubcondOracle, prefix: any, target: int, k: int, trial_cap: int = None) -> int:
    '''
    Draws the next coordinate after a prefix until the target symbol has
    been seen k times, and returns the number of draws. The count follows
    a negative binomial distribution with mean k/p, where p is the marginal
    of the target.

    Draws are issued in batches of the number of successes still missing.
    The k-th success can only fall on the last draw of a batch, so no draw
    is ever issued past it and the count and the queries charged are
    exactly those of drawing one symbol at a time.

    :param oracle:      The oracle to draw from
    :type oracle:       SubcondOracle
    :param prefix:      The fixed coordinates, shorter than n
    :type prefix:       any
    :param target:      The symbol to count
    :type target:       int
    :param k:           The number of successes to wait for
    :type k:            int
    :param trial_cap:   An optional limit on the draws of this call
    :type trial_cap:    int

    :returns:           The number of draws
    :rtype:             int
    '''

    target = oracle.alphabet.validate_symbol(target)
    k = int(k)
    successes = 0
    trials = 0
    while successes < k:
        batch = k - successes
        if trial_cap is not None:
            batch = min(batch, int(trial_cap) - trials)
            if batch <= 0:
                raise NonterminationSuspected(
                    f"Only {successes} of {k} successes for symbol {target} after the cap of {trial_cap} draws.")
        draws = oracle.sample_next_many(prefix, batch)
        trials += batch
        successes += int(np.count_nonzero(draws == target))
    return trials

def sub_to_eval (oracle: SubcondOracle, eps: float, sigma: any, k: int = None, trial_cap: int = None) -> PointEstimate:
    '''
    Estimates the probability of a full string. With k = ceil(4n/ε²) the
    estimate lies within a (1±ε) factor of the truth with probability at
    least 2/3, provided ε < 1/2 and every marginal along the string is
    positive. Values of ε up to 1 are accepted, without the guarantee.

    :param oracle:      The oracle of the distribution
    :type oracle:       SubcondOracle
    :param eps:         The relative accuracy, in (0, 1)
    :type eps:          float
    :param sigma:       The full string to evaluate
    :type sigma:        any
    :param k:           An explicit number of successes, overriding the formula
    :type k:            int
    :param trial_cap:   An optional limit on the draws per coordinate
    :type trial_cap:    int

    :returns:           The point estimate
    :rtype:             PointEstimate
    '''

    eps = helper.validate_open_interval(eps, 0.0, 1.0, "evaluator accuracy ε")
    symbols = as_string(sigma, oracle.n, oracle.alphabet)
    if k is None:
        k = trials_for(oracle.n, eps)

    # Count the trials of every coordinate along the string
    start = oracle.meter.count
    trials = [
        negative_binomial_count(oracle, symbols[:j], symbols[j], k, trial_cap)
        for j in range(oracle.n)]
    estimate = PointEstimate(trials, k, oracle.meter.count - start)
    printer.debug(f"Point estimate {estimate.value:.6g} with k = {k} after {estimate.queries} draws.")
    return estimate

def median_amplify (estimates: any) -> float:
    '''
    Returns the median of independent estimates. An even number of
    estimates returns the lower of the two middle values, so the result is
    always one of the estimates.

    :param estimates:   The estimates, or point estimates
    :type estimates:    any

    :returns:           The median
    :rtype:             float
    '''

    values = [e.value if isinstance(e, PointEstimate) else float(e) for e in estimates]
    return lower_median(values)
