#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import numpy as np
from ..utils import DomainMismatch
from .model import DistributionModel


def check_same_domain (p: DistributionModel, q: DistributionModel) -> None:
    '''
    Raises a DomainMismatch exception if the two models are not defined on
    the same dimension and alphabet.

    :param p:   The first model
    :type p:    DistributionModel
    :param q:   The second model
    :type q:    DistributionModel
    '''

    if p.n != q.n or p.alphabet != q.alphabet:
        raise DomainMismatch(
            f"Models over {p.alphabet.size}^{p.n} and {q.alphabet.size}^{q.n} are not on the same domain.")

def exact_tv (p: DistributionModel, q: DistributionModel) -> float:
    '''
    Computes the total variation distance between two models by enumerating
    the whole domain. This is the brute-force ground truth and is bound by
    the enumeration guard.

    :param p:   The first model
    :type p:    DistributionModel
    :param q:   The second model
    :type q:    DistributionModel

    :returns:   The total variation distance, in [0, 1]
    :rtype:     float
    '''

    check_same_domain(p, q)
    p.require_enumerable()
    distance = 0.5 * float(np.abs(p.probability_table() - q.probability_table()).sum())
    return min(1.0, max(0.0, distance))
