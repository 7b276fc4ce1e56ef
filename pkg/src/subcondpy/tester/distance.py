#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module estimates the total variation distance between two
distributions from samples of the second one and evaluators of both. For
σ drawn from Q, the quantity max(0, 1 - P(σ)/Q(σ)) has expectation equal
to the distance, so its mean over m samples is an estimate of it.
'''

import math
from typing import Callable, List
import numpy as np
from ..maths.utils import ceil_int
from ..utils import helper, EvaluatorFailure, InvalidParameter


def gamma_entry (p: float, q: float) -> float:
    '''
    Returns the entry max(0, 1 - p/q) of a sample with estimates p and q.

    :param p:   The estimate under the first distribution
    :type p:    float
    :param q:   The estimate under the second distribution, positive
    :type q:    float

    :returns:   The entry, in [0, 1)
    :rtype:     float
    '''

    if not q > 0.0:
        raise EvaluatorFailure(f"The evaluator of the sampled distribution returned {q!r} for a sample.")
    return 1.0 - p / q if q > p else 0.0

def distance_estimate (q_sampler: Callable, p_evaluator: Callable, q_evaluator: Callable, m: int,
        entries: List[float] = None) -> float:
    '''
    Estimates the total variation distance between P and Q as the mean of
    max(0, 1 - p_σ/q_σ) over m samples σ drawn from Q. If the evaluators
    are accurate to within (1±θ1) and (1±θ2) and m is at least
    required_samples(θ1, θ2, δ), the estimate is within θ of the distance
    with probability at least 1-δ.

    :param q_sampler:   A callable returning a sample of Q
    :type q_sampler:    Callable
    :param p_evaluator: A callable returning the estimate of P at a sample
    :type p_evaluator:  Callable
    :param q_evaluator: A callable returning the estimate of Q at a sample
    :type q_evaluator:  Callable
    :param m:           The number of samples
    :type m:            int
    :param entries:     An optional list that receives every entry
    :type entries:      List[float]

    :returns:           The distance estimate
    :rtype:             float
    '''

    if int(m) != m or m < 1:
        raise InvalidParameter(f"The number of samples must be a positive integer, got {m}.")
    total = 0.0
    for _ in range(int(m)):
        sigma = q_sampler()
        entry = gamma_entry(float(p_evaluator(sigma)), float(q_evaluator(sigma)))
        if entries is not None:
            entries.append(entry)
        total += entry
    return total / m

def estimate_accuracy (theta1: float, theta2: float) -> float:
    '''
    Returns the accuracy θ = 2(θ1 + θ2)/(1 - θ2) of the distance estimate
    for evaluators of relative accuracy θ1 and θ2.

    :param theta1:  The relative accuracy of the evaluator of P
    :type theta1:   float
    :param theta2:  The relative accuracy of the evaluator of Q, below one
    :type theta2:   float

    :returns:       The accuracy of the estimate
    :rtype:         float
    '''

    theta1, theta2 = float(theta1), float(theta2)
    if theta1 < 0.0 or not (0.0 <= theta2 < 1.0):
        raise InvalidParameter(f"The evaluator accuracies must satisfy θ1 >= 0 and 0 <= θ2 < 1, got {theta1} and {theta2}.")
    return 2.0 * (theta1 + theta2) / (1.0 - theta2)

def required_samples (theta1: float, theta2: float, delta: float) -> int:
    '''
    Returns the number of samples m = ceil(4 ln(2/δ)/θ²) for which the
    distance estimate is within θ = 2(θ1 + θ2)/(1 - θ2) of the distance
    with probability at least 1-δ.

    :param theta1:  The relative accuracy of the evaluator of P
    :type theta1:   float
    :param theta2:  The relative accuracy of the evaluator of Q
    :type theta2:   float
    :param delta:   The failure probability, in (0, 1)
    :type delta:    float

    :returns:       The number of samples
    :rtype:         int
    '''

    delta = helper.validate_open_interval(delta, 0.0, 1.0, "failure probability δ")
    theta = estimate_accuracy(theta1, theta2)
    if theta <= 0.0:
        raise InvalidParameter("At least one evaluator must have a positive accuracy.")
    return ceil_int(4.0 * math.log(2.0 / delta) / (theta * theta))

def noisy_evaluator (evaluator: Callable, theta: float, generator: np.random.Generator) -> Callable:
    '''
    Wraps an exact evaluator with multiplicative noise drawn uniformly from
    [1-θ, 1+θ], which gives a (1±θ)-accurate evaluator.

    :param evaluator:   The exact evaluator
    :type evaluator:    Callable
    :param theta:       The relative noise, in [0, 1)
    :type theta:        float
    :param generator:   The generator of the noise
    :type generator:    np.random.Generator

    :returns:           The noisy evaluator
    :rtype:             Callable
    '''

    theta = float(theta)
    if not (0.0 <= theta < 1.0):
        raise InvalidParameter(f"The relative noise must lie in [0, 1), got {theta}.")
    return lambda sigma: float(evaluator(sigma)) * generator.uniform(1.0 - theta, 1.0 + theta)
