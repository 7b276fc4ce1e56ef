from .alphabet import Alphabet, Prefix, as_symbols, as_string
from .meter import QueryMeter
from .oracle import SubcondOracle, SimulatedOracle, MeteredOracle, draw_symbols
