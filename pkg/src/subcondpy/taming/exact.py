#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module builds the tamed distribution of a model exactly, by applying
the taming mixture to every conditional marginal of the model and
multiplying them back together. It is only used for verification, so it
is bound by the enumeration guard.
'''

from typing import Tuple
import numpy as np
from ..maths import constants
from ..models import DistributionModel, ExplicitDistribution, exact_tv
from ..oracle import as_string
from ..utils import types, printer
from .tamed import validate_taming, tamed_vector


def tame_exact (model: DistributionModel, theta: float, mode: str = None) -> ExplicitDistribution:
    '''
    Constructs the tamed distribution of a model, in which the probability
    of a string is the product of its tamed conditional marginals.

    :param model:   The model to tame, within the enumeration guard
    :type model:    DistributionModel
    :param theta:   The taming parameter, in (0, 1/2)
    :type theta:    float
    :param mode:    The taming mode, or None to pick it from the alphabet
    :type mode:     str

    :returns:       The tamed model
    :rtype:         ExplicitDistribution
    '''

    theta, mode = validate_taming(theta, mode, model.alphabet)
    explicit = model.to_explicit()
    table = np.ones(())
    for j in range(model.n):
        table = table[..., np.newaxis] * tamed_vector(explicit.conditional_tensor(j), theta, mode)
    printer.log(f"Tamed a model over {model.alphabet.size}^{model.n} strings with θ = {theta:.6g} ({mode}).")
    return ExplicitDistribution(table, model.alphabet)

def tamed_point_probability (model: DistributionModel, sigma: any, theta: float, mode: str = None) -> float:
    '''
    Returns the probability of a string under the tamed distribution of a
    model, without enumerating the domain.

    :param model:   The model
    :type model:    DistributionModel
    :param sigma:   The full string
    :type sigma:    any
    :param theta:   The taming parameter, in (0, 1/2)
    :type theta:    float
    :param mode:    The taming mode, or None to pick it from the alphabet
    :type mode:     str

    :returns:       The tamed probability
    :rtype:         float
    '''

    theta, mode = validate_taming(theta, mode, model.alphabet)
    symbols = as_string(sigma, model.n, model.alphabet)
    probability = 1.0
    for j in range(model.n):
        probability *= float(tamed_vector(model.marginal_vector(symbols[:j]), theta, mode)[symbols[j]])
    return probability

def marginal_floor (theta: float, mode: str, size: int) -> Tuple[float, float]:
    '''
    Returns the range every tamed marginal must lie in: [θ, 1-θ] over the
    hypercube and [θ/|Σ|, 1-θ+θ/|Σ|] over the hypergrid.

    :param theta:   The taming parameter
    :type theta:    float
    :param mode:    The taming mode
    :type mode:     str
    :param size:    The alphabet size
    :type size:     int

    :returns:       The lowest and highest allowed marginal
    :rtype:         Tuple[float, float]
    '''

    if mode == types.HYPERCUBE:
        return (theta, 1.0 - theta)
    return (theta / size, 1.0 - theta + theta / size)

def tame_check (model: DistributionModel, theta: float, mode: str = None) -> dict:
    '''
    Checks the taming guarantees on a model: the distance to the tamed
    model is at most θn and every tamed marginal respects the floor.

    :param model:   The model, within the enumeration guard
    :type model:    DistributionModel
    :param theta:   The taming parameter, in (0, 1/2)
    :type theta:    float
    :param mode:    The taming mode, or None to pick it from the alphabet
    :type mode:     str

    :returns:       The fields tv, bound, marginal_min, marginal_max, mode and pass
    :rtype:         dict
    '''

    theta, mode = validate_taming(theta, mode, model.alphabet)
    tamed = tame_exact(model, theta, mode)
    tv = exact_tv(model, tamed)
    bound = theta * model.n
    low, high = tamed.marginal_range()
    floor_low, floor_high = marginal_floor(theta, mode, model.alphabet.size)
    passed = tv <= bound + constants.TV_TOLERANCE \
        and low >= floor_low - constants.FLOOR_TOLERANCE \
        and high <= floor_high + constants.FLOOR_TOLERANCE
    return {
        "tv": tv,
        "bound": bound,
        "marginal_min": low,
        "marginal_max": high,
        "mode": mode,
        "theta": theta,
        "pass": bool(passed),
    }
