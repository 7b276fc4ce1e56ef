#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from .estimate import PointEstimate
from .evaluator import trials_for, negative_binomial_count, sub_to_eval, median_amplify
from .expectation import expected_queries, expected_queries_under
