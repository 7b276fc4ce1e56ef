#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from typing import Tuple
import numpy as np
from ..maths import constants
from ..oracle import Alphabet
from ..utils import printer, types, InvalidParameter, DomainTooLarge
from .model import DistributionModel


class ExplicitDistribution (DistributionModel):
    '''
    An explicit distribution stores the probability of every string of Σ^n
    in a dense table. The subcube masses of every prefix level are computed
    once at construction, so conditional marginals are a table lookup.
    '''

    kind: str = types.EXPLICIT

    __mass: np.ndarray = None
    '''Defines the dense probability table, with n axes of length |Σ|.'''

    __levels: list = []
    '''Defines the subcube masses of all prefixes of length j, for j = 0 to n.'''

    def __init__ (self, mass: any, alphabet: any = 2) -> None:
        '''
        Initialises the distribution from a table of masses. The table may be
        flat, in lexicographic order with the first coordinate most
        significant, or already shaped with one axis per coordinate. The
        masses are validated to sum to one and then divided by their sum.

        :param mass:        The probability of every string
        :type mass:         any
        :param alphabet:    The alphabet, or its size
        :type alphabet:     any
        '''

        alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
        table = np.asarray(mass, dtype=np.float64)
        if table.size > constants.MAX_DOMAIN_SIZE:
            raise DomainTooLarge(f"An explicit table of {table.size} entries exceeds the enumeration guard.")

        # Work out the dimension from the table size
        n = int(round(np.log(table.size) / np.log(alphabet.size))) if table.size > 1 else 0
        if n < 1 or alphabet.size ** n != table.size:
            raise InvalidParameter(
                f"A table of {table.size} entries is not a power of the alphabet size {alphabet.size}.")
        if table.ndim != 1 and table.shape != (alphabet.size,) * n:
            raise InvalidParameter(f"A table of shape {table.shape} does not match Σ^n.")
        super().__init__(n, alphabet)

        # Check the masses and normalise them
        if not np.all(np.isfinite(table)) or np.any(table < 0):
            raise InvalidParameter("The masses of an explicit distribution must be finite and nonnegative.")
        total = float(table.sum())
        if abs(total - 1.0) > constants.SUM_TOLERANCE:
            raise InvalidParameter(f"The masses of an explicit distribution sum to {total!r}, not one.")
        self.__mass = (table / total).reshape((alphabet.size,) * n)
        self.__mass.setflags(write=False)

        # Precompute the subcube mass of every prefix, level by level
        levels = [self.__mass]
        for _ in range(n):
            levels.append(np.asarray(levels[-1].sum(axis=-1)))
        self.__levels = levels[::-1]
        for level in self.__levels:
            level.setflags(write=False)

        printer.log(f"Explicit distribution over {alphabet.size}^{n} strings created.")

    def marginal_vector (self, prefix: Tuple[int, ...]) -> np.ndarray:
        j = len(prefix)
        total = float(self.__levels[j][prefix])
        if total <= 0.0:
            return np.full(self.alphabet.size, 1.0 / self.alphabet.size)
        return self.__levels[j + 1][prefix] / total

    def subcube_mass (self, prefix: Tuple[int, ...]) -> float:
        return float(self.__levels[len(prefix)][prefix])

    def level_mass (self, j: int) -> np.ndarray:
        '''
        Returns the subcube masses of every prefix of length j, as an array
        with j axes.

        :param j:   The prefix length, from 0 to n
        :type j:    int

        :returns:   The subcube masses
        :rtype:     np.ndarray
        '''

        return self.__levels[j]

    def conditional_tensor (self, j: int) -> np.ndarray:
        '''
        Returns the conditional marginals of coordinate j (zero based) for
        every prefix of length j at once, as an array with j+1 axes. Zero
        mass prefixes take the uniform vector.

        :param j:   The zero based coordinate
        :type j:    int

        :returns:   The conditional marginal tensor
        :rtype:     np.ndarray
        '''

        parent = self.__levels[j][..., np.newaxis]
        child = self.__levels[j + 1]
        with np.errstate(divide="ignore", invalid="ignore"):
            tensor = np.where(parent > 0, child / np.where(parent > 0, parent, 1.0), 1.0 / self.alphabet.size)
        return tensor

    def marginal_range (self) -> Tuple[float, float]:
        '''
        Returns the smallest and largest conditional marginal over every
        coordinate, every prefix of positive mass and every symbol.

        :returns:   The minimum and maximum marginal
        :rtype:     Tuple[float, float]
        '''

        low, high = 1.0, 0.0
        for j in range(self.n):
            tensor = self.conditional_tensor(j)
            positive = np.broadcast_to(self.__levels[j][..., np.newaxis] > 0, tensor.shape)
            if np.any(positive):
                low = min(low, float(tensor[positive].min()))
                high = max(high, float(tensor[positive].max()))
        return (low, high)

    def probability_table (self) -> np.ndarray:
        return self.__mass

    def to_explicit (self) -> ExplicitDistribution:
        return self

    def export (self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "alphabet_size": self.alphabet.size,
            "payload": self.__mass.reshape(-1).tolist(),
        }
