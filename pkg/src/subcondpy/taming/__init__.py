#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from .tamed import TamedOracle, default_mode, validate_taming, delegate_probability, tamed_vector
from .exact import tame_exact, tamed_point_probability, marginal_floor, tame_check
