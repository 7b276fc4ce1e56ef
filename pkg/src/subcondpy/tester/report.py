#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
import json, os
import pandas as pd
from ..utils import types, helper, ConfigError
from .params import TesterParams


class RunReport:
    '''
    The RunReport stores the outcome of one run of the tolerant tester. It
    holds the verdict, the distance estimate Z and every entry Γ[i] it was
    averaged from, the queries spent on each distribution, whether the
    budget was exhausted, the seed and a full echo of the parameters. This
    is a pure data class that can be exported to JSON and loaded back.
    '''

    verdict: str = types.REJECT
    '''Defines the verdict, accept or reject.'''

    z: float = 0.0
    '''Defines the distance estimate, the mean of the Γ entries.'''

    gamma_entries: list = []
    '''Defines the entries Γ[i] = max(0, 1 - p_i/q_i) computed before the run ended.'''

    samples: list = []
    '''Defines the strings σ_i drawn from the sampled distribution.'''

    p_estimates: list = []
    '''Defines the median estimates p_i of the tamed distribution.'''

    q_estimates: list = []
    '''Defines the median estimates q_i of the sampled distribution.'''

    queries_p: int = 0
    '''Defines the queries charged to the first distribution.'''

    queries_q: int = 0
    '''Defines the queries charged to the second distribution.'''

    budget_exceeded: bool = False
    '''Defines whether the run was stopped by the query budget.'''

    params: TesterParams = None
    '''Defines the parameters of the run.'''

    seed: int = None
    '''Defines the seed of the run, if it was seeded.'''

    def __init__ (self, params: TesterParams, seed: int = None) -> None:
        '''
        Initialises an empty report for a run.

        :param params:  The parameters of the run
        :type params:   TesterParams
        :param seed:    The seed of the run
        :type seed:     int
        '''

        self.verdict = types.REJECT
        self.z = 0.0
        self.gamma_entries = []
        self.samples = []
        self.p_estimates = []
        self.q_estimates = []
        self.queries_p = 0
        self.queries_q = 0
        self.budget_exceeded = False
        self.params = params
        self.seed = seed

    @property
    def threshold (self) -> float:
        return self.params.threshold

    @property
    def queries (self) -> int:
        return self.queries_p + self.queries_q

    @property
    def accepted (self) -> bool:
        return self.verdict == types.ACCEPT

    def export (self) -> dict:
        '''
        Exports the report to a dictionary of JSON types.

        :returns:   The report
        :rtype:     dict
        '''

        return {
            "verdict": self.verdict,
            "Z": self.z,
            "threshold": self.threshold,
            "gamma_entries": list(self.gamma_entries),
            "samples": list(self.samples),
            "p_estimates": list(self.p_estimates),
            "q_estimates": list(self.q_estimates),
            "queries_P": self.queries_p,
            "queries_Q": self.queries_q,
            "budget_exceeded": self.budget_exceeded,
            "params": self.params.export(),
            "seed": self.seed,
        }

    @classmethod
    def from_dict (cls, data: dict) -> RunReport:
        '''
        Restores a report from its exported dictionary.

        :param data:    The exported report
        :type data:     dict

        :returns:       The report
        :rtype:         RunReport
        '''

        try:
            report = cls(TesterParams.load(data["params"]), data.get("seed"))
            report.verdict = data["verdict"]
            report.z = float(data["Z"])
            report.gamma_entries = [float(g) for g in data["gamma_entries"]]
            report.samples = list(data.get("samples", []))
            report.p_estimates = [float(p) for p in data.get("p_estimates", [])]
            report.q_estimates = [float(q) for q in data.get("q_estimates", [])]
            report.queries_p = int(data["queries_P"])
            report.queries_q = int(data["queries_Q"])
            report.budget_exceeded = bool(data["budget_exceeded"])
        except (KeyError, TypeError, ValueError) as error:
            raise ConfigError(f"The run report is malformed: {error!r}.")
        return report

    @classmethod
    def load (cls, path: str) -> RunReport:
        '''
        Loads a report from a JSON file.

        :param path:    The path to the file
        :type path:     str

        :returns:       The report
        :rtype:         RunReport
        '''

        if not path or not os.path.exists(path):
            raise ConfigError(f"Invalid path '{path}' provided to load a run report.")
        with open(path, "r") as file:
            return cls.from_dict(json.load(file))

    def save (self, path: str) -> None:
        '''
        Saves the report to a JSON file.

        :param path:    The path to save the report to
        :type path:     str
        '''

        with open(path, "w") as file:
            file.write(self.__str__())

    def to_dataframe (self) -> pd.DataFrame:
        '''
        Converts the outer samples of the run to a pandas DataFrame, with one
        row per sample and the columns sample, p, q and gamma.

        :returns:   The samples of the run
        :rtype:     pd.DataFrame
        '''

        count = len(self.gamma_entries)
        return pd.DataFrame({
            "sample": self.samples[:count],
            "p": self.p_estimates[:count],
            "q": self.q_estimates[:count],
            "gamma": self.gamma_entries,
        })

    def __str__ (self) -> str:
        return helper.to_json(self.export())

    def __repr__ (self) -> str:
        return f"RunReport(verdict={self.verdict!r}, Z={self.z:.6g}, queries={self.queries})"
