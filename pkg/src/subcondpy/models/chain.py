#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from typing import Tuple
import numpy as np
from ..oracle import Alphabet
from ..utils import printer, types, helper, InvalidParameter
from .model import DistributionModel


class ChainDistribution (DistributionModel):
    '''
    A chain distribution is a position-dependent Markov chain over the
    coordinates. The first coordinate is drawn from an initial vector and
    every later coordinate from the row of its transition matrix selected
    by the previous symbol, so the marginal only depends on the last symbol
    of the prefix.
    '''

    kind: str = types.CHAIN

    __initial: np.ndarray = None
    '''Defines the marginal vector of the first coordinate.'''

    __transitions: np.ndarray = None
    '''Defines the n-1 row-stochastic transition matrices, each |Σ| by |Σ|.'''

    def __init__ (self, initial: any, transitions: any, alphabet: any = None) -> None:
        '''
        Initialises the chain from the initial vector and the transitions.

        :param initial:     The marginal vector of the first coordinate
        :type initial:      any
        :param transitions: The n-1 transition matrices
        :type transitions:  any
        :param alphabet:    The alphabet, or its size; defaults to the vector length
        :type alphabet:     any
        '''

        initial = helper.validate_probability_vector(initial, "initial vector")
        alphabet = initial.size if alphabet is None else alphabet
        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        if initial.size != alphabet.size:
            raise InvalidParameter(
                f"The initial vector has {initial.size} symbols but the alphabet has {alphabet.size}.")

        # Validate every row of every transition matrix
        matrices = np.array(transitions, dtype=np.float64).reshape((-1, alphabet.size, alphabet.size)) \
            if np.size(transitions) > 0 else np.empty((0, alphabet.size, alphabet.size))
        for index, matrix in enumerate(matrices):
            for row, vector in enumerate(matrix):
                matrix[row] = helper.validate_probability_vector(
                    vector, f"row {row} of transition {index + 1}")
        super().__init__(matrices.shape[0] + 1, alphabet)

        self.__initial = initial
        self.__transitions = matrices
        self.__initial.setflags(write=False)
        self.__transitions.setflags(write=False)
        printer.log(f"Chain distribution over {alphabet.size}^{self.n} strings created.")

    @property
    def initial (self) -> np.ndarray:
        return self.__initial

    @property
    def transitions (self) -> np.ndarray:
        return self.__transitions

    def marginal_vector (self, prefix: Tuple[int, ...]) -> np.ndarray:
        if len(prefix) == 0:
            return self.__initial
        if self.subcube_mass(prefix) <= 0.0:
            return np.full(self.alphabet.size, 1.0 / self.alphabet.size)
        return self.__transitions[len(prefix) - 1, prefix[-1]]

    def subcube_mass (self, prefix: Tuple[int, ...]) -> float:
        if len(prefix) == 0:
            return 1.0
        mass = float(self.__initial[prefix[0]])
        for j in range(1, len(prefix)):
            mass *= float(self.__transitions[j - 1, prefix[j - 1], prefix[j]])
        return mass

    def probability_table (self) -> np.ndarray:
        self.require_enumerable()
        table = self.__initial
        for matrix in self.__transitions:
            # Joint over the prefix, times the transition from its last symbol
            table = table[..., np.newaxis] * matrix
        return table

    def export (self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "alphabet_size": self.alphabet.size,
            "payload": {
                "initial": self.__initial.tolist(),
                "transitions": self.__transitions.tolist(),
            },
        }
