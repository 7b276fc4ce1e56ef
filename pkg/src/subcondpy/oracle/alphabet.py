#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from typing import Tuple
from ..utils import InvalidPrefix, InvalidParameter


class Alphabet:
    '''
    The Alphabet class defines the set of symbols each coordinate of a string
    may take. Symbols are the integers 0 to size-1, and the hypercube is the
    special case of a binary alphabet.
    '''

    size: int = 2
    '''Defines the number of symbols |Σ| in the alphabet.'''

    def __init__ (self, size: int = 2) -> None:
        '''
        Initialises the alphabet with a number of symbols.

        :param size:    The number of symbols, at least two
        :type size:     int
        '''

        if int(size) != size or size < 2:
            raise InvalidParameter(f"An alphabet requires at least two symbols, got {size}.")
        self.size = int(size)

    @property
    def is_hypercube (self) -> bool:
        '''
        Returns whether the alphabet is binary.

        :returns:   A flag whether |Σ| = 2
        :rtype:     bool
        '''

        return self.size == 2

    def validate_symbol (self, symbol: int) -> int:
        '''
        Checks that a symbol is part of the alphabet and returns it as an int.

        :param symbol:  The symbol to check
        :type symbol:   int

        :returns:       The symbol
        :rtype:         int
        '''

        if int(symbol) != symbol or not (0 <= symbol < self.size):
            raise InvalidPrefix(f"Symbol {symbol!r} is outside the alphabet of size {self.size}.")
        return int(symbol)

    def parse (self, text: str) -> Tuple[int, ...]:
        '''
        Parses a string of symbols. Alphabets of up to ten symbols use one
        digit per coordinate ("0110"); larger alphabets use comma separated
        integers ("3,11,0"). An empty string is the empty prefix.

        :param text:    The text to parse
        :type text:     str

        :returns:       The symbols
        :rtype:         Tuple[int, ...]
        '''

        text = text.strip()
        if text == "":
            return ()
        if "," in text or self.size > 10:
            parts = [part.strip() for part in text.split(",")]
        else:
            parts = list(text)
        try:
            return tuple(self.validate_symbol(int(part)) for part in parts)
        except ValueError:
            raise InvalidPrefix(f"Failed to parse '{text}' as a string over an alphabet of size {self.size}.")

    def format (self, symbols: any) -> str:
        '''
        Formats symbols back to text, the inverse of parse.

        :param symbols: The symbols to format
        :type symbols:  any

        :returns:       The text
        :rtype:         str
        '''

        if self.size > 10:
            return ",".join(str(int(s)) for s in symbols)
        return "".join(str(int(s)) for s in symbols)

    def __eq__ (self, other: object) -> bool:
        return isinstance(other, Alphabet) and other.size == self.size

    def __hash__ (self) -> int:
        return hash(self.size)

    def __repr__ (self) -> str:
        return f"Alphabet({self.size})"


class Prefix:
    '''
    A prefix fixes the first j-1 coordinates of a string of dimension n and
    leaves the rest free. The empty prefix denotes the unconditioned
    distribution, and a prefix of length n is a single string.
    '''

    __slots__ = ("symbols", "n")

    def __init__ (self, symbols: any, n: int, alphabet: Alphabet) -> None:
        '''
        Initialises and validates the prefix.

        :param symbols:     The fixed symbols
        :type symbols:      any
        :param n:           The dimension of the strings
        :type n:            int
        :param alphabet:    The alphabet of the symbols
        :type alphabet:     Alphabet
        '''

        if isinstance(symbols, str):
            symbols = alphabet.parse(symbols)
        symbols = tuple(alphabet.validate_symbol(s) for s in symbols)
        if len(symbols) > n:
            raise InvalidPrefix(f"A prefix of length {len(symbols)} is longer than the dimension {n}.")
        self.symbols = symbols
        self.n = int(n)

    def extend (self, symbol: int) -> Prefix:
        '''
        Returns the prefix with one more fixed symbol. The symbol is assumed
        to have been validated.

        :param symbol:  The symbol to append
        :type symbol:   int

        :returns:       The longer prefix
        :rtype:         Prefix
        '''

        prefix = Prefix.__new__(Prefix)
        prefix.symbols = self.symbols + (int(symbol),)
        prefix.n = self.n
        if len(prefix.symbols) > self.n:
            raise InvalidPrefix("Cannot extend a prefix that already fixes every coordinate.")
        return prefix

    @property
    def is_full (self) -> bool:
        return len(self.symbols) == self.n

    def __len__ (self) -> int:
        return len(self.symbols)

    def __iter__ (self):
        return iter(self.symbols)

    def __eq__ (self, other: object) -> bool:
        if isinstance(other, Prefix):
            return other.symbols == self.symbols and other.n == self.n
        return False

    def __hash__ (self) -> int:
        return hash((self.symbols, self.n))

    def __repr__ (self) -> str:
        return f"Prefix({self.symbols}, n={self.n})"


def as_symbols (value: any, n: int, alphabet: Alphabet) -> Tuple[int, ...]:
    '''
    Converts a prefix, a tuple or list of symbols, or a string of symbols to
    a validated tuple of at most n symbols.

    :param value:       The value to convert
    :type value:        any
    :param n:           The dimension of the strings
    :type n:            int
    :param alphabet:    The alphabet of the symbols
    :type alphabet:     Alphabet

    :returns:           The symbols
    :rtype:             Tuple[int, ...]
    '''

    if isinstance(value, Prefix):
        if value.n != n:
            raise InvalidPrefix(f"The prefix has dimension {value.n} but {n} was expected.")
        return value.symbols
    return Prefix(value, n, alphabet).symbols


def as_string (value: any, n: int, alphabet: Alphabet) -> Tuple[int, ...]:
    '''
    Converts a value to a validated full string of exactly n symbols.

    :param value:       The value to convert
    :type value:        any
    :param n:           The dimension of the strings
    :type n:            int
    :param alphabet:    The alphabet of the symbols
    :type alphabet:     Alphabet

    :returns:           The symbols
    :rtype:             Tuple[int, ...]
    '''

    symbols = as_symbols(value, n, alphabet)
    if len(symbols) != n:
        raise InvalidPrefix(f"A full string of length {n} was expected, got length {len(symbols)}.")
    return symbols
