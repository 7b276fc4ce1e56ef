#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from .model import DistributionModel
from .explicit import ExplicitDistribution
from .product import ProductDistribution, uniform, point_mass
from .chain import ChainDistribution
from .distance import exact_tv, check_same_domain
from .factory import from_document, from_spec, random_model, resolve_model, load_model, save_model
