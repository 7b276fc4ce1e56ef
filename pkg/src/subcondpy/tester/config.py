#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from ..maths import constants
from ..utils import types, ConfigError


class TesterConfig:
    '''
    The TesterConfig holds the library level settings of the tolerant
    tester that are not part of the problem itself: the profile and its
    multipliers, an optional override of the taming parameter and mode, an
    optional trial cap per evaluator call and the switch to substitute the
    exact evaluators of simulated models for the estimated ones.
    '''

    profile: str = types.PAPER_PROFILE
    '''Defines the profile, paper or engineering.'''

    m_scale: float = constants.DEFAULT_M_SCALE
    '''Defines the engineering multiplier of the outer sample count.'''

    t_scale: float = constants.DEFAULT_T_SCALE
    '''Defines the engineering multiplier of the median repetitions.'''

    k_scale: float = constants.DEFAULT_K_SCALE
    '''Defines the engineering multiplier of the evaluator trial count.'''

    theta: float = None
    '''Defines an override of the taming parameter, or None for the default.'''

    mode: str = None
    '''Defines an override of the taming mode, or None to pick it from the alphabet.'''

    trial_cap: int = None
    '''Defines a limit on the draws per coordinate of an evaluator call, or None.'''

    exact_evaluators: bool = False
    '''Defines whether the exact probabilities of simulated models replace the estimates.'''

    def __init__ (self, profile: str = types.PAPER_PROFILE, m_scale: float = constants.DEFAULT_M_SCALE,
            t_scale: float = constants.DEFAULT_T_SCALE, k_scale: float = constants.DEFAULT_K_SCALE,
            theta: float = None, mode: str = None, trial_cap: int = None, exact_evaluators: bool = False) -> None:
        '''
        Initialises and validates the configuration.

        :param profile:             The profile, paper or engineering
        :type profile:              str
        :param m_scale:             The engineering multiplier of m
        :type m_scale:              float
        :param t_scale:             The engineering multiplier of t
        :type t_scale:              float
        :param k_scale:             The engineering multiplier of k
        :type k_scale:              float
        :param theta:               An override of the taming parameter
        :type theta:                float
        :param mode:                An override of the taming mode
        :type mode:                 str
        :param trial_cap:           A limit on the draws per coordinate
        :type trial_cap:            int
        :param exact_evaluators:    Whether to use the exact evaluators
        :type exact_evaluators:     bool
        '''

        if profile not in types.PROFILES:
            raise ConfigError(f"Unknown profile '{profile}'; expected one of {types.PROFILES}.")
        for name, scale in (("m_scale", m_scale), ("t_scale", t_scale), ("k_scale", k_scale)):
            if not (0.0 < float(scale) <= 1.0):
                raise ConfigError(f"The multiplier {name} must lie in (0, 1], got {scale}.")
        if mode is not None and mode not in types.TAMING_MODES:
            raise ConfigError(f"Unknown taming mode '{mode}'; expected one of {types.TAMING_MODES}.")
        if trial_cap is not None and int(trial_cap) < 1:
            raise ConfigError(f"The trial cap must be positive, got {trial_cap}.")

        self.profile = profile
        self.m_scale = float(m_scale)
        self.t_scale = float(t_scale)
        self.k_scale = float(k_scale)
        self.theta = None if theta is None else float(theta)
        self.mode = mode
        self.trial_cap = None if trial_cap is None else int(trial_cap)
        self.exact_evaluators = bool(exact_evaluators)

    @classmethod
    def paper (cls, **kwargs) -> TesterConfig:
        '''
        Creates a configuration under the paper profile, with the unscaled
        constants.

        :returns:   The configuration
        :rtype:     TesterConfig
        '''

        return cls(profile=types.PAPER_PROFILE, **kwargs)

    @classmethod
    def engineering (cls, **kwargs) -> TesterConfig:
        '''
        Creates a configuration under the engineering profile.

        :returns:   The configuration
        :rtype:     TesterConfig
        '''

        return cls(profile=types.ENGINEERING_PROFILE, **kwargs)

    def export (self) -> dict:
        return {
            "profile": self.profile,
            "m_scale": self.m_scale,
            "t_scale": self.t_scale,
            "k_scale": self.k_scale,
            "theta": self.theta,
            "mode": self.mode,
            "trial_cap": self.trial_cap,
            "exact_evaluators": self.exact_evaluators,
        }
