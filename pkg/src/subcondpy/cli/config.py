#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
import json, os
from ..maths import constants
from ..models import DistributionModel, resolve_model
from ..tester import TesterConfig
from ..utils import types, ConfigError


class ScenarioConfig:
    '''
    The ScenarioConfig describes one campaign of the tolerant tester on the
    command line: the two models, the closeness parameters, the profile and
    its multipliers, the number of trials, the seed and where the report is
    written. It is loaded from a single JSON document and then overridden
    by the command line flags that were given.
    '''

    p_model: any = None
    '''Defines the reference to the model of P: a path, an inline document or a spec string.'''

    q_model: any = None
    '''Defines the reference to the model of Q.'''

    eps1: float = None
    '''Defines the closeness parameter ε1.'''

    eps2: float = None
    '''Defines the farness parameter ε2.'''

    profile: str = types.ENGINEERING_PROFILE
    '''Defines the profile of the tester.'''

    m_scale: float = constants.DEFAULT_M_SCALE
    '''Defines the engineering multiplier of m.'''

    t_scale: float = constants.DEFAULT_T_SCALE
    '''Defines the engineering multiplier of t.'''

    k_scale: float = constants.DEFAULT_K_SCALE
    '''Defines the engineering multiplier of k.'''

    theta: float = None
    '''Defines an override of the taming parameter.'''

    mode: str = None
    '''Defines an override of the taming mode.'''

    trials: int = 1
    '''Defines the number of independent runs.'''

    seed: int = 0
    '''Defines the master seed of the campaign.'''

    out: str = None
    '''Defines the path of the report, or None for the standard output.'''

    workers: int = 1
    '''Defines the number of worker processes.'''

    FIELDS: tuple = ("p_model", "q_model", "eps1", "eps2", "profile", "m_scale", "t_scale", "k_scale",
        "theta", "mode", "trials", "seed", "out", "workers")
    '''The fields that may appear in the JSON document and as flags.'''

    def __init__ (self, **fields) -> None:
        '''
        Initialises the configuration from keyword fields.
        '''

        unknown = [name for name in fields if name not in self.FIELDS]
        if len(unknown) > 0:
            raise ConfigError(f"Unknown scenario fields {unknown}; expected fields from {list(self.FIELDS)}.")
        for name, value in fields.items():
            setattr(self, name, value)

    @classmethod
    def load (cls, path: str) -> ScenarioConfig:
        '''
        Loads a configuration from a JSON document.

        :param path:    The path to the document
        :type path:     str

        :returns:       The configuration
        :rtype:         ScenarioConfig
        '''

        if not path or not os.path.isfile(path):
            raise ConfigError(f"The scenario file '{path}' does not exist.")
        try:
            with open(path, "r") as file:
                document = json.load(file)
        except json.JSONDecodeError as error:
            raise ConfigError(f"The scenario file '{path}' is not valid JSON: {error}.")
        if not isinstance(document, dict):
            raise ConfigError(f"The scenario file '{path}' must hold a JSON object.")
        return cls(**document)

    def override (self, **flags) -> ScenarioConfig:
        '''
        Overrides the fields with every flag that is not None.

        :returns:   The configuration itself
        :rtype:     ScenarioConfig
        '''

        for name, value in flags.items():
            if name in self.FIELDS and value is not None:
                setattr(self, name, value)
        return self

    def validate (self) -> None:
        '''
        Checks that the configuration is complete and consistent.
        '''

        for name in ("p_model", "q_model", "eps1", "eps2"):
            if getattr(self, name) is None:
                raise ConfigError(f"The scenario does not define '{name}'.")
        try:
            self.eps1, self.eps2 = float(self.eps1), float(self.eps2)
            self.trials, self.seed, self.workers = int(self.trials), int(self.seed), int(self.workers)
        except (TypeError, ValueError) as error:
            raise ConfigError(f"The scenario has an invalid numeric field: {error}.")
        if not (0.0 <= self.eps1 < self.eps2 <= 1.0):
            raise ConfigError(f"The scenario needs 0 <= eps1 < eps2 <= 1, got {self.eps1} and {self.eps2}.")
        if self.trials < 1:
            raise ConfigError(f"The scenario needs at least one trial, got {self.trials}.")
        if self.workers < 1:
            raise ConfigError(f"The scenario needs at least one worker, got {self.workers}.")

    def models (self) -> tuple:
        '''
        Resolves both model references.

        :returns:   The models of P and Q
        :rtype:     tuple
        '''

        return (resolve_model(self.p_model), resolve_model(self.q_model))

    def tester_config (self) -> TesterConfig:
        '''
        Creates the tester configuration of the scenario.

        :returns:   The tester configuration
        :rtype:     TesterConfig
        '''

        return TesterConfig(self.profile, self.m_scale, self.t_scale, self.k_scale, self.theta, self.mode)

    def export (self) -> dict:
        '''
        Exports the fields that determine the results. The output path and
        the number of workers are left out, so that a report does not
        change with either.

        :returns:   The fields of the scenario
        :rtype:     dict
        '''

        fields = {}
        for name in self.FIELDS:
            if name in ("out", "workers"):
                continue
            value = getattr(self, name)
            fields[name] = value.export() if isinstance(value, DistributionModel) else value
        return fields
