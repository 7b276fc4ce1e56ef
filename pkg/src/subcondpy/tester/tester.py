#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module implements the tolerant closeness tester. Given oracles of two
distributions P and Q over Σ^n and parameters ε1 < ε2, it accepts when the
distributions are within ε1 and rejects when they are more than ε2 apart
in total variation, each with probability at least 3/5.
'''

from ..estimator import sub_to_eval, median_amplify
from ..models import DistributionModel
from ..oracle import SubcondOracle, SimulatedOracle, MeteredOracle, QueryMeter
from ..taming import TamedOracle, tamed_point_probability
from ..utils import printer, types, helper, BudgetExhausted, ConfigError, DomainMismatch
from .config import TesterConfig
from .distance import distance_estimate
from .params import derive_params
from .report import RunReport


def sub_vs_sub (p: SubcondOracle, q: SubcondOracle, eps1: float, eps2: float, config: TesterConfig = None,
        seed: int = None) -> RunReport:
    '''
    Runs the tolerant tester on the oracles of P and Q.

    The parameters are derived first. P is then wrapped in a tamed oracle
    with parameter θ and, for each of the m outer samples, a string σ is
    drawn from Q and evaluated t times under both the tamed P and Q at
    accuracy γ/8. The medians p and q give the entry max(0, 1 - p/q), and
    the run accepts if and only if the mean Z of the entries is at most
    (ε1 + ε2)/2.

    Every query, the draws of σ included, is charged to a budget of M
    queries shared by both oracles. If the budget runs out, the run stops
    and rejects with the budget_exceeded flag set.

    :param p:       The oracle of P
    :type p:        SubcondOracle
    :param q:       The oracle of Q
    :type q:        SubcondOracle
    :param eps1:    The closeness parameter, in [0, 1)
    :type eps1:     float
    :param eps2:    The farness parameter, in (ε1, 1]
    :type eps2:     float
    :param config:  The tester configuration; defaults to the paper profile
    :type config:   TesterConfig
    :param seed:    The seed of the run, echoed in the report
    :type seed:     int

    :returns:       The report of the run
    :rtype:         RunReport
    '''

    config = TesterConfig.paper() if config is None else config
    if p.n != q.n or p.alphabet != q.alphabet:
        raise DomainMismatch(
            f"Oracles over {p.alphabet.size}^{p.n} and {q.alphabet.size}^{q.n} are not on the same domain.")
    params = derive_params(p.n, p.alphabet, eps1, eps2, config.profile, config.m_scale, config.t_scale,
        config.k_scale, config.theta, config.mode)
    report = RunReport(params, seed)

    # Both oracles share a single budget through their parent meter
    budget = QueryMeter(params.budget)
    p_metered = MeteredOracle(p, QueryMeter(parent=budget))
    q_metered = MeteredOracle(q, QueryMeter(parent=budget))
    p_tamed = TamedOracle(p_metered, params.theta, params.mode)

    # Pick the evaluators, either estimated or exact for simulated models
    if config.exact_evaluators:
        p_model, q_model = getattr(p, "model", None), getattr(q, "model", None)
        if not isinstance(p_model, DistributionModel) or not isinstance(q_model, DistributionModel):
            raise ConfigError("The exact evaluators need oracles that are backed by a distribution model.")
        p_evaluate = lambda sigma: tamed_point_probability(p_model, sigma, params.theta, params.mode)
        q_evaluate = q_model.point_probability
    else:
        p_evaluate = lambda sigma: median_amplify(
            sub_to_eval(p_tamed, params.eps_eval, sigma, params.k, config.trial_cap) for _ in range(params.t))
        q_evaluate = lambda sigma: median_amplify(
            sub_to_eval(q_metered, params.eps_eval, sigma, params.k, config.trial_cap) for _ in range(params.t))

    # Record every sample and its estimates on the report
    def sample () -> tuple:
        sigma = q_metered.sample_full(())
        report.samples.append(p.alphabet.format(sigma))
        return sigma

    def evaluate_p (sigma: tuple) -> float:
        value = float(p_evaluate(sigma))
        report.p_estimates.append(value)
        return value

    def evaluate_q (sigma: tuple) -> float:
        value = float(q_evaluate(sigma))
        report.q_estimates.append(value)
        return value

    try:
        report.z = distance_estimate(sample, evaluate_p, evaluate_q, params.m, report.gamma_entries)
        report.verdict = types.ACCEPT if report.z <= params.threshold else types.REJECT
    except BudgetExhausted:
        report.z = sum(report.gamma_entries) / params.m
        report.budget_exceeded = True
        report.verdict = types.REJECT

    report.queries_p = p_metered.meter.count
    report.queries_q = q_metered.meter.count
    printer.log(f"Tester verdict '{report.verdict}' with Z = {report.z:.6g} against {params.threshold:.6g} "
        f"after {report.queries} of {params.budget} queries.")
    return report

def run_sub_vs_sub (p_model: DistributionModel, q_model: DistributionModel, eps1: float, eps2: float,
        config: TesterConfig = None, seed: int = 0) -> RunReport:
    '''
    Runs the tolerant tester on simulated oracles of two models. Each
    oracle owns a generator whose seed is derived from the run seed, so the
    report is a pure function of the models, the configuration and the
    seed.

    :param p_model: The model of P
    :type p_model:  DistributionModel
    :param q_model: The model of Q
    :type q_model:  DistributionModel
    :param eps1:    The closeness parameter
    :type eps1:     float
    :param eps2:    The farness parameter
    :type eps2:     float
    :param config:  The tester configuration
    :type config:   TesterConfig
    :param seed:    The seed of the run
    :type seed:     int

    :returns:       The report of the run
    :rtype:         RunReport
    '''

    p = SimulatedOracle(p_model, seed=helper.derive_seed(seed, 1))
    q = SimulatedOracle(q_model, seed=helper.derive_seed(seed, 2))
    return sub_vs_sub(p, q, eps1, eps2, config, seed)
