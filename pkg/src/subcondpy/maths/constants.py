#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This file contains public constants related to numerical tolerances,
the desk-scale enumeration guard and the constants of the tolerant
closeness tester and its subroutines.
'''

SUM_TOLERANCE: float = 1e-12
'''[-] Absolute tolerance for a probability vector or table to sum to one'''

FLOOR_TOLERANCE: float = 1e-12
'''[-] Absolute tolerance used when checking the marginal floor of a tamed model'''

TV_TOLERANCE: float = 1e-9
'''[-] Slack allowed on the taming distance bound θn'''

CHAIN_RULE_TOLERANCE: float = 1e-9
'''[-] Relative tolerance of the chain-rule cross-check on point probabilities'''

MAX_DOMAIN_SIZE: int = 2 ** 24
'''[-] The largest |Σ|^n that may be enumerated by the exact models'''

SEED_MASK: int = (1 << 64) - 1
'''[-] Mask reducing seeds to 64 bits'''


EVAL_SAMPLES_FACTOR: float = 4.0
'''[-] The trial count k of the point evaluator is ceil(4n/ε²)'''

SAMPLES_FACTOR: float = 2.0 ** 4
'''[-] The number of outer samples m is ceil(2^4 ln(20) / γ²)'''

SAMPLES_LOG_ARGUMENT: float = 20.0
'''[-] The argument of the logarithm in the outer sample count'''

REPEATS_FACTOR: float = 48.0
'''[-] The number of median repetitions t is ceil(48 ln(10m))'''

REPEATS_LOG_FACTOR: float = 10.0
'''[-] The factor on m inside the logarithm of the repetition count'''

EVAL_ACCURACY_DIVISOR: float = 8.0
'''[-] The point evaluator runs at accuracy γ/8'''

BUDGET_MARKOV_FACTOR: float = 10.0
'''[-] The Markov factor on the expected query count in the budget M'''

BUDGET_TAMED_FACTOR: float = 2.0 ** 10
'''[-] The coefficient of n³mt/γ³ (queries spent on the tamed distribution) in the budget M'''

BUDGET_SAMPLED_FACTOR: float = 2.0 ** 9
'''[-] The coefficient of n²mt/γ² (queries spent on the sampled distribution) in the budget M'''


DEFAULT_M_SCALE: float = 0.1
'''[-] The default engineering multiplier on the outer sample count m'''

DEFAULT_T_SCALE: float = 0.02
'''[-] The default engineering multiplier on the median repetition count t'''

DEFAULT_K_SCALE: float = 0.01
'''[-] The default engineering multiplier on the evaluator trial count k'''


SUCCESS_PROBABILITY_EVAL: float = 2.0 / 3.0
'''[-] The claimed probability that one point estimate lies within (1±ε)'''

SUCCESS_PROBABILITY_TEST: float = 3.0 / 5.0
'''[-] The claimed probability that the tester returns the correct verdict'''
