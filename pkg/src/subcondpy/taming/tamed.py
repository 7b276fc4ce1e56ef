#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from typing import Tuple
import numpy as np
from ..oracle import Alphabet, SubcondOracle, QueryMeter, as_symbols
from ..utils import types, helper, InvalidParameter


def default_mode (alphabet: Alphabet) -> str:
    '''
    Returns the taming mode that suits an alphabet: the hypercube mode for
    binary alphabets and the hypergrid mode otherwise.

    :param alphabet:    The alphabet
    :type alphabet:     Alphabet

    :returns:           The taming mode
    :rtype:             str
    '''

    return types.HYPERCUBE if alphabet.is_hypercube else types.HYPERGRID

def validate_taming (theta: float, mode: str, alphabet: Alphabet) -> Tuple[float, str]:
    '''
    Validates a taming parameter and mode for an alphabet. The parameter
    must lie in (0, 1/2) and the hypercube mode needs a binary alphabet.

    :param theta:       The taming parameter
    :type theta:        float
    :param mode:        The taming mode, or None for the default
    :type mode:         str
    :param alphabet:    The alphabet
    :type alphabet:     Alphabet

    :returns:           The validated parameter and mode
    :rtype:             Tuple[float, str]
    '''

    theta = helper.validate_open_interval(theta, 0.0, 0.5, "taming parameter θ")
    mode = default_mode(alphabet) if mode is None else mode
    if mode not in types.TAMING_MODES:
        raise InvalidParameter(f"Unknown taming mode '{mode}'; expected one of {types.TAMING_MODES}.")
    if mode == types.HYPERCUBE and not alphabet.is_hypercube:
        raise InvalidParameter(f"The hypercube taming mode needs a binary alphabet, got {alphabet.size} symbols.")
    return theta, mode

def delegate_probability (theta: float, mode: str) -> float:
    '''
    Returns the probability that a tamed draw is delegated to the inner
    distribution: 1-2θ for the hypercube and 1-θ for the hypergrid.

    :param theta:   The taming parameter
    :type theta:    float
    :param mode:    The taming mode
    :type mode:     str

    :returns:       The delegation probability
    :rtype:         float
    '''

    return 1.0 - 2.0 * theta if mode == types.HYPERCUBE else 1.0 - theta

def tamed_vector (vector: np.ndarray, theta: float, mode: str) -> np.ndarray:
    '''
    Applies the taming mixture to marginal vectors along the last axis:
    (1-2θ)p + θ over the hypercube and (1-θ)p + θ/|Σ| over the hypergrid.
    On a binary alphabet both give the same mixture of p with the uniform
    vector, at different weights.

    :param vector:  The marginal vector, or a tensor of them
    :type vector:   np.ndarray
    :param theta:   The taming parameter
    :type theta:    float
    :param mode:    The taming mode
    :type mode:     str

    :returns:       The tamed marginals
    :rtype:         np.ndarray
    '''

    vector = np.asarray(vector, dtype=np.float64)
    weight = delegate_probability(theta, mode)
    return weight * vector + (1.0 - weight) / vector.shape[-1]


class TamedOracle (SubcondOracle):
    '''
    The TamedOracle wraps the oracle of a distribution and mixes every
    conditional marginal with the uniform distribution, so that no marginal
    falls below θ (hypercube) or θ/|Σ| (hypergrid). The tamed distribution
    is at most θn away from the original in total variation.

    Each draw is delegated to the inner oracle with probability 1-2θ
    (hypercube) or 1-θ (hypergrid), and is otherwise a uniform symbol drawn
    by the wrapper itself. Only delegated draws are queries, so the meter
    of this oracle is the meter of the inner one.
    '''

    inner: SubcondOracle = None
    '''Defines the oracle of the untamed distribution.'''

    theta: float = 0.0
    '''Defines the taming parameter θ, in (0, 1/2).'''

    mode: str = types.HYPERCUBE
    '''Defines the taming mode, hypercube or hypergrid.'''

    def __init__ (self, inner: SubcondOracle, theta: float, mode: str = None, generator: np.random.Generator = None) -> None:
        '''
        Initialises the wrapper.

        :param inner:       The oracle of the untamed distribution
        :type inner:        SubcondOracle
        :param theta:       The taming parameter, in (0, 1/2)
        :type theta:        float
        :param mode:        The taming mode, or None to pick it from the alphabet
        :type mode:         str
        :param generator:   The generator of the uniform branch; defaults to the inner one
        :type generator:    np.random.Generator
        '''

        self.theta, self.mode = validate_taming(theta, mode, inner.alphabet)
        self.inner = inner
        self.n = inner.n
        self.alphabet = inner.alphabet
        self.generator = inner.generator if generator is None else generator

    @property
    def meter (self) -> QueryMeter:
        return self.inner.meter

    @property
    def model (self) -> any:
        return getattr(self.inner, "model", None)

    def sample_next_many (self, prefix: any, count: int) -> np.ndarray:
        symbols = self._next_prefix(prefix)
        count = int(count)
        if count < 1:
            return np.empty(0, dtype=np.int64)

        # Choose the delegated draws, then fill the rest uniformly
        delegated = self.generator.random(count) < delegate_probability(self.theta, self.mode)
        draws = self.generator.integers(0, self.alphabet.size, size=count)
        total = int(np.count_nonzero(delegated))
        if total > 0:
            draws[delegated] = self.inner.sample_next_many(symbols, total)
        return draws

    def sample_full (self, prefix: any = ()) -> Tuple[int, ...]:
        symbols = as_symbols(prefix, self.n, self.alphabet)
        while len(symbols) < self.n:
            symbols = symbols + (self.sample_next(symbols),)
        return symbols
