#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from functools import reduce
from typing import Tuple
import numpy as np
from ..oracle import Alphabet
from ..utils import printer, types, helper, InvalidParameter
from .model import DistributionModel


class ProductDistribution (DistributionModel):
    '''
    A product distribution draws every coordinate independently from its own
    marginal vector. The conditional marginal of a coordinate never depends
    on the prefix, unless the prefix has zero mass, in which case the
    uniform vector is returned like every other model.
    '''

    kind: str = types.PRODUCT

    __marginals: np.ndarray = None
    '''Defines the n by |Σ| matrix of per-coordinate marginals.'''

    def __init__ (self, marginals: any, alphabet: any = None) -> None:
        '''
        Initialises the distribution from one marginal vector per coordinate.

        :param marginals:   The n marginal vectors, each of length |Σ|
        :type marginals:    any
        :param alphabet:    The alphabet, or its size; defaults to the vector length
        :type alphabet:     any
        '''

        rows = np.asarray(marginals, dtype=np.float64)
        if rows.ndim != 2 or rows.shape[0] < 1:
            raise InvalidParameter("A product distribution requires an n by |Σ| matrix of marginals.")
        if alphabet is None:
            alphabet = rows.shape[1]
        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        if rows.shape[1] != alphabet.size:
            raise InvalidParameter(
                f"The marginals have {rows.shape[1]} symbols but the alphabet has {alphabet.size}.")
        super().__init__(rows.shape[0], alphabet)

        self.__marginals = np.stack([
            helper.validate_probability_vector(row, f"marginal of coordinate {i + 1}")
            for i, row in enumerate(rows)])
        self.__marginals.setflags(write=False)
        printer.log(f"Product distribution over {alphabet.size}^{self.n} strings created.")

    @property
    def marginals (self) -> np.ndarray:
        return self.__marginals

    def marginal_vector (self, prefix: Tuple[int, ...]) -> np.ndarray:
        if self.subcube_mass(prefix) <= 0.0:
            return np.full(self.alphabet.size, 1.0 / self.alphabet.size)
        return self.__marginals[len(prefix)]

    def subcube_mass (self, prefix: Tuple[int, ...]) -> float:
        mass = 1.0
        for j, symbol in enumerate(prefix):
            mass *= float(self.__marginals[j, symbol])
        return mass

    def probability_table (self) -> np.ndarray:
        self.require_enumerable()
        return reduce(np.multiply.outer, self.__marginals)

    def export (self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "alphabet_size": self.alphabet.size,
            "payload": self.__marginals.tolist(),
        }


def uniform (n: int, alphabet: any = 2) -> ProductDistribution:
    '''
    Creates the uniform distribution over Σ^n.

    :param n:           The dimension of the strings
    :type n:            int
    :param alphabet:    The alphabet, or its size
    :type alphabet:     any

    :returns:           The uniform distribution
    :rtype:             ProductDistribution
    '''

    alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    return ProductDistribution(np.full((int(n), alphabet.size), 1.0 / alphabet.size), alphabet)

def point_mass (string: any, alphabet: any = 2) -> ProductDistribution:
    '''
    Creates the distribution that puts all of its mass on a single string.

    :param string:      The string carrying the mass, as text or symbols
    :type string:       any
    :param alphabet:    The alphabet, or its size
    :type alphabet:     any

    :returns:           The point-mass distribution
    :rtype:             ProductDistribution
    '''

    alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    symbols = alphabet.parse(string) if isinstance(string, str) else tuple(alphabet.validate_symbol(s) for s in string)
    if len(symbols) == 0:
        raise InvalidParameter("A point mass requires a nonempty string.")
    rows = np.zeros((len(symbols), alphabet.size))
    rows[np.arange(len(symbols)), symbols] = 1.0
    return ProductDistribution(rows, alphabet)
