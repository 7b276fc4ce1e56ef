#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Tuple
import numpy as np
from ..utils import InvalidPrefix, InvalidParameter, helper
from .alphabet import Alphabet, as_symbols
from .meter import QueryMeter


class SubcondOracle (ABC):
    '''
    The SubcondOracle is the query interface to a distribution over Σ^n. A
    query fixes a prefix of the coordinates and returns either the next
    coordinate or a full string drawn from the distribution conditioned on
    that prefix. Every query is charged to the meter of the oracle. Only
    prefix conditioning is supported; the free coordinates always form a
    suffix.
    '''

    n: int = 0
    '''Defines the dimension of the strings.'''

    alphabet: Alphabet = None
    '''Defines the alphabet of each coordinate.'''

    generator: np.random.Generator = None
    '''Defines the pseudo-random generator owned by the oracle.'''

    @property
    @abstractmethod
    def meter (self) -> QueryMeter:
        '''
        Returns the meter that counts the queries issued by this oracle.

        :returns:   The query meter
        :rtype:     QueryMeter
        '''

    @abstractmethod
    def sample_next_many (self, prefix: any, count: int) -> np.ndarray:
        '''
        Draws count independent symbols from the marginal of the next
        coordinate given the prefix. Exactly count queries are charged.

        :param prefix:  The fixed coordinates, shorter than n
        :type prefix:   any
        :param count:   The number of independent draws
        :type count:    int

        :returns:       The drawn symbols
        :rtype:         np.ndarray
        '''

    @abstractmethod
    def sample_full (self, prefix: any = ()) -> Tuple[int, ...]:
        '''
        Draws a full string from the distribution conditioned on the prefix.

        :param prefix:  The fixed coordinates, at most n of them
        :type prefix:   any

        :returns:       The full string
        :rtype:         Tuple[int, ...]
        '''

    def sample_next (self, prefix: any) -> int:
        '''
        Draws the next coordinate given the prefix, charging one query.

        :param prefix:  The fixed coordinates, shorter than n
        :type prefix:   any

        :returns:       The drawn symbol
        :rtype:         int
        '''

        return int(self.sample_next_many(prefix, 1)[0])

    def _next_prefix (self, prefix: any) -> Tuple[int, ...]:
        '''
        Validates a prefix for a next-coordinate query.

        :param prefix:  The prefix to validate
        :type prefix:   any

        :returns:       The symbols of the prefix
        :rtype:         Tuple[int, ...]
        '''

        symbols = as_symbols(prefix, self.n, self.alphabet)
        if len(symbols) >= self.n:
            raise InvalidPrefix(f"A next-coordinate query needs a prefix shorter than {self.n}, got length {len(symbols)}.")
        return symbols


class SimulatedOracle (SubcondOracle):
    '''
    A simulated oracle answers queries from a fully known distribution
    model. Next-coordinate queries sample the exact conditional marginal
    directly, and full-string queries sample the remaining coordinates
    ancestrally; both are charged a single query.
    '''

    model: any = None
    '''Defines the distribution model that answers the queries.'''

    __meter: QueryMeter = None
    '''Defines the meter that counts the queries of this oracle.'''

    def __init__ (self, model: any, generator: np.random.Generator = None, budget: int = None, seed: int = None) -> None:
        '''
        Initialises the oracle from a model and a generator. If no generator
        is passed, one is created from the seed.

        :param model:       The distribution model answering the queries
        :type model:        DistributionModel
        :param generator:   The pseudo-random generator owned by the oracle
        :type generator:    np.random.Generator
        :param budget:      An optional hard ceiling on the queries
        :type budget:       int
        :param seed:        The seed used when no generator is passed
        :type seed:         int
        '''

        if generator is None:
            if seed is None:
                raise InvalidParameter("A simulated oracle requires either a generator or a seed.")
            generator = helper.create_generator(seed)
        self.model = model
        self.n = model.n
        self.alphabet = model.alphabet
        self.generator = generator
        self.__meter = QueryMeter(budget)

    @property
    def meter (self) -> QueryMeter:
        return self.__meter

    def sample_next_many (self, prefix: any, count: int) -> np.ndarray:
        symbols = self._next_prefix(prefix)
        count = int(count)
        if count < 1:
            return np.empty(0, dtype=np.int64)
        # Issue what the budget allows, then refuse the rest
        granted = self.__meter.grant(count)
        self.__meter.charge(granted)
        draws = draw_symbols(self.model.marginal_vector(symbols), granted, self.generator)
        if granted < count:
            self.__meter.refuse(count - granted)
        return draws

    def sample_full (self, prefix: any = ()) -> Tuple[int, ...]:
        symbols = as_symbols(prefix, self.n, self.alphabet)
        self.__meter.charge(1)
        return self.model.sample_exact(self.generator, symbols)


class MeteredOracle (SubcondOracle):
    '''
    A metered oracle wraps another oracle with an additional meter, so that a
    caller can count and cap its own queries without touching the meter of
    the wrapped oracle. A batch is cut to what this meter still allows before
    it is delegated, and this meter is then charged exactly the queries the
    wrapped meter recorded, so both counts agree even on the error path. The
    wrapped oracle should be a plain one, whose full-string draw is a single
    query.
    '''

    inner: SubcondOracle = None
    '''Defines the oracle that answers the queries.'''

    __meter: QueryMeter = None
    '''Defines the meter of this wrapper.'''

    def __init__ (self, inner: SubcondOracle, meter: QueryMeter = None) -> None:
        '''
        Initialises the wrapper around an oracle.

        :param inner:   The oracle to wrap
        :type inner:    SubcondOracle
        :param meter:   The meter to charge, or a fresh unlimited one
        :type meter:    QueryMeter
        '''

        self.inner = inner
        self.n = inner.n
        self.alphabet = inner.alphabet
        self.generator = inner.generator
        self.__meter = meter if meter is not None else QueryMeter()

    @property
    def meter (self) -> QueryMeter:
        return self.__meter

    @property
    def model (self) -> any:
        return getattr(self.inner, "model", None)

    def sample_next_many (self, prefix: any, count: int) -> np.ndarray:
        self._next_prefix(prefix)
        count = int(count)
        if count < 1:
            return np.empty(0, dtype=np.int64)
        granted = self.__meter.grant(count)
        before = self.inner.meter.count
        try:
            draws = self.inner.sample_next_many(prefix, granted)
        finally:
            self.__meter.charge(self.inner.meter.count - before)
        if granted < count:
            self.__meter.refuse(count - granted)
        return draws

    def sample_full (self, prefix: any = ()) -> Tuple[int, ...]:
        as_symbols(prefix, self.n, self.alphabet)
        if self.__meter.grant(1) < 1:
            self.__meter.refuse(1)
        before = self.inner.meter.count
        try:
            return self.inner.sample_full(prefix)
        finally:
            self.__meter.charge(self.inner.meter.count - before)


def draw_symbols (vector: np.ndarray, count: int, generator: np.random.Generator) -> np.ndarray:
    '''
    Draws symbols independently from a probability vector by inverting its
    cumulative distribution.

    :param vector:      The probability vector over the alphabet
    :type vector:       np.ndarray
    :param count:       The number of draws
    :type count:        int
    :param generator:   The pseudo-random generator
    :type generator:    np.random.Generator

    :returns:           The drawn symbols
    :rtype:             np.ndarray
    '''

    cumulative = np.cumsum(vector)
    draws = np.searchsorted(cumulative, generator.random(count) * cumulative[-1], side="right")
    return np.minimum(draws, len(vector) - 1)
