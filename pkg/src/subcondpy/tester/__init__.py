#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from .params import TesterParams, derive_params, samples_for, repeats_for, budget_terms, budget_for
from .config import TesterConfig
from .report import RunReport
from .distance import gamma_entry, distance_estimate, estimate_accuracy, required_samples, noisy_evaluator
from .tester import sub_vs_sub, run_sub_vs_sub
