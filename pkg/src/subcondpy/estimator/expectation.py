#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module computes the exact expected number of queries of the point
evaluator, for a single string and averaged over strings drawn from the
distribution itself.
'''

import numpy as np
from ..models import DistributionModel
from ..oracle import as_string
from ..utils import helper, InfiniteExpectation
from .evaluator import trials_for


def expected_queries (model: DistributionModel, sigma: any, eps: float) -> float:
    '''
    Returns the expected number of queries of the point evaluator on a
    string, k times the sum of the reciprocal marginals along the string,
    with k = ceil(4n/ε²).

    :param model:   The distribution model
    :type model:    DistributionModel
    :param sigma:   The full string
    :type sigma:    any
    :param eps:     The relative accuracy
    :type eps:      float

    :returns:       The expected number of queries
    :rtype:         float
    '''

    eps = helper.validate_open_interval(eps, 0.0, 1.0, "evaluator accuracy ε")
    symbols = as_string(sigma, model.n, model.alphabet)
    k = trials_for(model.n, eps)
    total = 0.0
    for j in range(model.n):
        marginal = float(model.marginal_vector(symbols[:j])[symbols[j]])
        if marginal <= 0.0:
            raise InfiniteExpectation(
                f"The marginal of coordinate {j + 1} along {model.alphabet.format(symbols)} is zero.")
        total += 1.0 / marginal
    return k * total

def expected_queries_under (model: DistributionModel, eps: float) -> float:
    '''
    Returns the expected number of queries of the point evaluator on a
    string drawn from the model itself. Each coordinate contributes the
    mass of every prefix times the number of symbols it can be followed by,
    so the result is k·n·|Σ| for models of full support.

    :param model:   The distribution model, within the enumeration guard
    :type model:    DistributionModel
    :param eps:     The relative accuracy
    :type eps:      float

    :returns:       The expected number of queries
    :rtype:         float
    '''

    eps = helper.validate_open_interval(eps, 0.0, 1.0, "evaluator accuracy ε")
    explicit = model.to_explicit()
    k = trials_for(model.n, eps)
    total = 0.0
    for j in range(model.n):
        support = np.count_nonzero(explicit.level_mass(j + 1) > 0, axis=-1)
        total += float((explicit.level_mass(j) * support).sum())
    return k * total
