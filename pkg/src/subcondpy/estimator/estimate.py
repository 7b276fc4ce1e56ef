#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from typing import Tuple
import numpy as np
from ..utils import helper


class PointEstimate:
    '''
    The PointEstimate holds the output of one run of the point evaluator:
    the estimated probability of a string, the number of trials each
    coordinate needed to reach k successes and the queries consumed.
    '''

    value: float = 0.0
    '''Defines the estimated probability, the product of k/x_j.'''

    per_coordinate_trials: Tuple[int, ...] = ()
    '''Defines the trial counts x_1 to x_n, each at least k.'''

    k: int = 1
    '''Defines the number of successes required per coordinate.'''

    queries: int = 0
    '''Defines the number of draws issued through the oracle, the sum of x_j.'''

    charged: int = 0
    '''Defines the change of the oracle meter across the run. This equals the
    queries, except for tamed oracles whose uniform branch is free.'''

    def __init__ (self, per_coordinate_trials: any, k: int, charged: int = None) -> None:
        '''
        Initialises the estimate from the trial counts.

        :param per_coordinate_trials:   The trial count of every coordinate
        :type per_coordinate_trials:    any
        :param k:                       The successes required per coordinate
        :type k:                        int
        :param charged:                 The change of the oracle meter, if known
        :type charged:                  int
        '''

        self.per_coordinate_trials = tuple(int(x) for x in per_coordinate_trials)
        self.k = int(k)
        self.queries = int(sum(self.per_coordinate_trials))
        self.charged = self.queries if charged is None else int(charged)
        self.value = float(np.prod(self.k / np.asarray(self.per_coordinate_trials, dtype=np.float64)))

    def within (self, truth: float, eps: float) -> bool:
        '''
        Returns whether the estimate lies within a (1±ε) factor of a true
        probability.

        :param truth:   The true probability
        :type truth:    float
        :param eps:     The relative accuracy
        :type eps:      float

        :returns:       A flag whether the estimate is accurate
        :rtype:         bool
        '''

        return (1.0 - eps) * truth <= self.value <= (1.0 + eps) * truth

    def export (self) -> dict:
        return {
            "value": self.value,
            "per_coordinate_trials": list(self.per_coordinate_trials),
            "k": self.k,
            "queries": self.queries,
            "charged": self.charged,
        }

    def __str__ (self) -> str:
        return helper.to_json(self.export())

    def __repr__ (self) -> str:
        return f"PointEstimate(value={self.value!r}, k={self.k}, queries={self.queries})"
