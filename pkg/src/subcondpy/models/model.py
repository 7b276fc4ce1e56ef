#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Tuple
import numpy as np
from ..maths import constants
from ..oracle import Alphabet, as_symbols, as_string, draw_symbols
from ..utils import DomainTooLarge, InvalidParameter, InvalidPrefix


class DistributionModel (ABC):
    '''
    The DistributionModel is a fully known distribution over Σ^n. It exposes
    the exact conditional marginal of every coordinate given any prefix, the
    exact probability of every string and exact ancestral sampling. These
    models are the ground truth that the simulated oracles answer from and
    that the estimators are validated against. Models are immutable once
    constructed.
    '''

    n: int = 0
    '''Defines the dimension of the strings.'''

    alphabet: Alphabet = None
    '''Defines the alphabet of each coordinate.'''

    kind: str = ""
    '''Defines the kind of the model, as written to the JSON documents.'''

    def __init__ (self, n: int, alphabet: Alphabet) -> None:
        '''
        Initialises the dimension and alphabet of the model.

        :param n:           The dimension of the strings
        :type n:            int
        :param alphabet:    The alphabet of each coordinate
        :type alphabet:     Alphabet
        '''

        if int(n) != n or n < 1:
            raise InvalidParameter(f"A model requires a positive dimension, got {n}.")
        self.n = int(n)
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)

    @property
    def domain_size (self) -> int:
        '''
        Returns the number of strings |Σ|^n of the domain.

        :returns:   The domain size
        :rtype:     int
        '''

        return self.alphabet.size ** self.n

    def require_enumerable (self) -> None:
        '''
        Raises if the domain is larger than the desk-scale enumeration guard.
        '''

        if self.domain_size > constants.MAX_DOMAIN_SIZE:
            raise DomainTooLarge(
                f"The domain of size {self.alphabet.size}^{self.n} exceeds the enumeration guard of {constants.MAX_DOMAIN_SIZE}.")

    @abstractmethod
    def marginal_vector (self, prefix: Tuple[int, ...]) -> np.ndarray:
        '''
        Returns the exact marginal distribution of the next coordinate given
        a validated prefix shorter than n. Prefixes of zero mass return the
        uniform vector.

        :param prefix:  The validated prefix symbols
        :type prefix:   Tuple[int, ...]

        :returns:       The marginal vector over the alphabet
        :rtype:         np.ndarray
        '''

    @abstractmethod
    def subcube_mass (self, prefix: Tuple[int, ...]) -> float:
        '''
        Returns the total probability of the strings that extend a
        validated prefix.

        :param prefix:  The validated prefix symbols
        :type prefix:   Tuple[int, ...]

        :returns:       The subcube mass
        :rtype:         float
        '''

    @abstractmethod
    def probability_table (self) -> np.ndarray:
        '''
        Returns the dense table of every string probability, as an array
        with n axes of length |Σ|. Only valid for enumerable domains.

        :returns:   The probability table
        :rtype:     np.ndarray
        '''

    @abstractmethod
    def export (self) -> dict:
        '''
        Exports the model to the JSON document format with the fields kind,
        n, alphabet_size and payload.

        :returns:   The model document
        :rtype:     dict
        '''

    def marginal (self, prefix: any, symbol: int) -> float:
        '''
        Returns the exact probability that the coordinate after the prefix
        takes the symbol, given the prefix.

        :param prefix:  The fixed coordinates, shorter than n
        :type prefix:   any
        :param symbol:  The symbol of the next coordinate
        :type symbol:   int

        :returns:       The conditional marginal probability
        :rtype:         float
        '''

        symbols = as_symbols(prefix, self.n, self.alphabet)
        if len(symbols) >= self.n:
            raise InvalidPrefix(f"A marginal needs a prefix shorter than {self.n}, got length {len(symbols)}.")
        symbol = self.alphabet.validate_symbol(symbol)
        return float(self.marginal_vector(symbols)[symbol])

    def point_probability (self, string: any) -> float:
        '''
        Returns the exact probability of a full string.

        :param string:  The full string
        :type string:   any

        :returns:       The probability of the string
        :rtype:         float
        '''

        return self.subcube_mass(as_string(string, self.n, self.alphabet))

    def chain_rule_probability (self, string: any) -> float:
        '''
        Returns the probability of a full string computed as the product of
        its conditional marginals. This always agrees with point_probability
        and is used to cross-check the models.

        :param string:  The full string
        :type string:   any

        :returns:       The chain-rule probability of the string
        :rtype:         float
        '''

        symbols = as_string(string, self.n, self.alphabet)
        probability = 1.0
        for j in range(self.n):
            probability *= float(self.marginal_vector(symbols[:j])[symbols[j]])
        return probability

    def sample_exact (self, generator: np.random.Generator, prefix: any = ()) -> Tuple[int, ...]:
        '''
        Draws a full string by ancestral sampling through the chain rule,
        starting after an optional prefix.

        :param generator:   The pseudo-random generator
        :type generator:    np.random.Generator
        :param prefix:      The fixed leading coordinates
        :type prefix:       any

        :returns:           The full string
        :rtype:             Tuple[int, ...]
        '''

        symbols = as_symbols(prefix, self.n, self.alphabet)
        while len(symbols) < self.n:
            symbols = symbols + (int(draw_symbols(self.marginal_vector(symbols), 1, generator)[0]),)
        return symbols

    def to_explicit (self):
        '''
        Converts the model to an explicit table over the whole domain.

        :returns:   The explicit model
        :rtype:     ExplicitDistribution
        '''

        from .explicit import ExplicitDistribution
        return ExplicitDistribution(self.probability_table(), self.alphabet)

    def __repr__ (self) -> str:
        return f"{type(self).__name__}(n={self.n}, alphabet={self.alphabet.size})"
