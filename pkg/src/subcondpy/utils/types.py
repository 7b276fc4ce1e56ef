#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module includes the string constants that are used throughout
the library for model kinds, tester profiles, taming modes and verdicts.
These are the same strings that appear in the JSON documents.
'''


EXPLICIT            = "explicit"
'''A dense table of probabilities over every string of the domain.'''

PRODUCT             = "product"
'''A product of independent per-coordinate marginal vectors.'''

CHAIN               = "chain"
'''A position-dependent Markov chain with an initial vector and transition matrices.'''

MODEL_KINDS         = [EXPLICIT, PRODUCT, CHAIN]
'''All of the model kinds that can be loaded, saved and generated.'''


PAPER_PROFILE       = "paper"
'''Uses the exact constants of the tester without any scaling.'''

ENGINEERING_PROFILE = "engineering"
'''Scales the sample, repetition and trial constants down for desk-scale runs.'''

PROFILES            = [PAPER_PROFILE, ENGINEERING_PROFILE]
'''All of the tester profiles.'''


HYPERCUBE           = "hypercube"
'''Taming over the binary alphabet, with marginals mixed as (1-2θ)p + θ.'''

HYPERGRID           = "hypergrid"
'''Taming over any alphabet, with marginals mixed as (1-θ)p + θ/|Σ|.'''

TAMING_MODES        = [HYPERCUBE, HYPERGRID]
'''All of the taming modes.'''


ACCEPT              = "accept"
'''The verdict returned when the distance estimate lies at or below the threshold.'''

REJECT              = "reject"
'''The verdict returned when the distance estimate is above the threshold or the budget ran out.'''
