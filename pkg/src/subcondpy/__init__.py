# Define the version
__version__ = "1.0.0"

# Import the standard utilities
from .utils import SubcondException, printer, types, helper

# Import the standard classes that are commonly used
from .oracle import Alphabet, Prefix, QueryMeter, SubcondOracle, SimulatedOracle, MeteredOracle
from .models import DistributionModel, ExplicitDistribution, ProductDistribution, ChainDistribution, \
    uniform, point_mass, random_model, load_model, save_model, exact_tv
from .estimator import PointEstimate, negative_binomial_count, sub_to_eval, median_amplify, expected_queries
from .taming import TamedOracle, tame_exact
from .tester import TesterParams, TesterConfig, RunReport, derive_params, distance_estimate, sub_vs_sub, run_sub_vs_sub
