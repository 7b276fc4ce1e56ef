#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module implements the commands of the command line. Every command
computes its whole output first and writes it in one go at the end, so
that a failing command leaves no partial output behind. Each command
returns its exit code: 0 on success and 1 when a single run rejects or a
check fails.
'''

import sys
from functools import partial
import numpy as np
from ..estimator import sub_to_eval, expected_queries, trials_for
from ..models import DistributionModel, resolve_model, random_model
from ..oracle import SimulatedOracle, as_string
from ..taming import tame_check
from ..tester import TesterConfig, run_sub_vs_sub
from ..utils import printer, types, helper, ConfigError, InvalidParameter
from ..verify import run_trials, bench, run_suite
from .config import ScenarioConfig
from . import schema


def write_output (text: str, out: str = None) -> None:
    '''
    Writes the output of a command to a file, or to the standard output if
    no path is given.

    :param text:    The text to write
    :type text:     str
    :param out:     The path of the file, or None
    :type out:      str
    '''

    if not text.endswith("\n"):
        text += "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w") as file:
            file.write(text)


def cmd_gen_model (kind: str, n: int, alphabet: int, seed: int, out: str = None) -> int:
    '''
    Draws a random model from a seed and writes its JSON document.
    '''

    model = random_model(kind, n, alphabet, seed)
    document = schema.validate(model.export(), schema.MODEL_SCHEMA, "model document")
    write_output(helper.to_json(document), out)
    printer.success(f"Generated a {kind} model over {alphabet}^{n} strings.")
    return 0


def _eval_trial (index: int, model: DistributionModel, sigma: tuple, eps: float, seed: int) -> tuple:
    oracle = SimulatedOracle(model, seed=helper.derive_seed(seed, index))
    estimate = sub_to_eval(oracle, eps, sigma)
    return (estimate.value, estimate.queries)

def cmd_eval_point (model: any, sigma: str, eps: float, trials: int, seed: int, out: str = None, workers: int = 1) -> int:
    '''
    Runs the point evaluator repeatedly on one string and reports the
    estimates, the rate at which they fall within (1±ε) of the truth and
    the mean queries against their exact expectation.

    A string of zero probability has a coordinate whose marginal is zero
    after a prefix of positive mass, where the evaluator cannot terminate.
    It is reported without estimates and with the success criterion marked
    as not applicable. Accuracies of 1/2 and above are run, but the success
    rate carries no guarantee there.
    '''

    model = resolve_model(model)
    symbols = as_string(model.alphabet.parse(sigma) if isinstance(sigma, str) else sigma, model.n, model.alphabet)
    eps = helper.validate_open_interval(eps, 0.0, 1.0, "evaluator accuracy ε")
    if int(trials) < 1:
        raise ConfigError(f"The number of trials must be positive, got {trials}.")
    truth = model.point_probability(symbols)

    document = {
        "sigma": model.alphabet.format(symbols),
        "eps": eps,
        "k": trials_for(model.n, eps),
        "guaranteed": eps < 0.5,
        "trials": int(trials),
        "seed": int(seed),
        "truth": truth,
        "estimates": [],
        "success_rate": None,
        "success_criterion": "not-applicable",
        "mean_queries": None,
        "expected_queries": None,
    }
    if truth > 0.0:
        results = run_trials(partial(_eval_trial, model=model, sigma=symbols, eps=eps, seed=seed), trials, workers)
        values = [value for value, _ in results]
        document["estimates"] = values
        document["success_rate"] = float(np.mean([(1.0 - eps) * truth <= v <= (1.0 + eps) * truth for v in values]))
        document["success_criterion"] = "within-1-plus-minus-eps"
        document["mean_queries"] = float(np.mean([queries for _, queries in results]))
        document["expected_queries"] = expected_queries(model, symbols, eps)

    schema.validate(document, schema.EVAL_POINT_SCHEMA, "eval-point output")
    write_output(helper.to_json(document), out)
    printer.success(f"Evaluated '{document['sigma']}' over {trials} trials.")
    return 0


def cmd_tame_check (model: any, theta: float, mode: str = None, out: str = None) -> int:
    '''
    Tames a model exactly and reports its distance to the model against
    the bound θn, with the range of the tamed marginals.
    '''

    result = tame_check(resolve_model(model), theta, mode)
    schema.validate(result, schema.TAME_CHECK_SCHEMA, "tame-check output")
    write_output(helper.to_json(result), out)
    printer.success(f"Tame check {'passed' if result['pass'] else 'failed'} with distance {result['tv']:.6g}.")
    return 0 if result["pass"] else 1


def _test_trial (index: int, p_model: DistributionModel, q_model: DistributionModel, eps1: float, eps2: float,
        config: TesterConfig, seed: int) -> dict:
    return run_sub_vs_sub(p_model, q_model, eps1, eps2, config, helper.derive_seed(seed, index)).export()

def cmd_test (scenario: ScenarioConfig) -> int:
    '''
    Runs independent replicas of the tolerant tester on a scenario and
    reports every run with the aggregate acceptance rate and queries. A
    scenario of a single run exits with 1 when the run rejects.
    '''

    scenario.validate()
    p_model, q_model = scenario.models()
    config = scenario.tester_config()
    trial = partial(_test_trial, p_model=p_model, q_model=q_model, eps1=scenario.eps1, eps2=scenario.eps2,
        config=config, seed=scenario.seed)
    runs = run_trials(trial, scenario.trials, scenario.workers)

    document = {
        "scenario": scenario.export(),
        "runs": runs,
        "aggregate": {
            "trials": len(runs),
            "accept_rate": float(np.mean([run["verdict"] == types.ACCEPT for run in runs])),
            "mean_queries": float(np.mean([run["queries_P"] + run["queries_Q"] for run in runs])),
            "budget_exceeded": int(sum(run["budget_exceeded"] for run in runs)),
            "params": runs[0]["params"],
        },
    }
    schema.validate_test_output(helper.serialize(document))
    write_output(helper.to_json(document), scenario.out)
    printer.success(f"Ran {len(runs)} trials with an acceptance rate of {document['aggregate']['accept_rate']:.3f}.")
    if len(runs) == 1 and runs[0]["verdict"] == types.REJECT:
        return 1
    return 0


def cmd_bench (ns: list, gamma: float, config: TesterConfig, seed: int, runs: int, out: str = None,
        workers: int = 1, alphabet: int = 2) -> int:
    '''
    Measures the mean queries of the tester over a grid of dimensions and
    writes them as CSV with the columns n, gamma, mean_queries and M.
    '''

    if int(runs) < 1:
        raise InvalidParameter(f"The number of runs must be positive, got {runs}.")
    table = bench(ns, gamma, config, seed, runs, alphabet, workers)
    write_output(table.to_csv(index=False, lineterminator="\n"), out)
    printer.success(f"Benchmarked {len(table)} configurations.")
    return 0


def cmd_verify (names: list, seed: int, out: str = None, workers: int = 1) -> int:
    '''
    Runs the named checks of the validation suite and writes the scorecard.
    '''

    scorecard = run_suite(names, seed, workers)
    schema.validate_scorecard(scorecard)
    write_output(helper.to_json(scorecard), out)
    printer.success(f"Ran {len(scorecard['checks'])} checks; all passed: {scorecard['passed']}.")
    return 0 if scorecard["passed"] else 1
