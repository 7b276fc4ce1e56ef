#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
import math
from ..maths import constants
from ..maths.utils import ceil_int
from ..oracle import Alphabet
from ..utils import printer, types, InvalidParameter


class TesterParams:
    '''
    The TesterParams hold every constant derived for one run of the
    tolerant tester: the gap γ, the number of outer samples m, the number
    of median repetitions t, the trial count k of the point evaluator at
    accuracy γ/8, the taming parameter θ and the query budget M. Under the
    engineering profile, m, t and k are scaled down by the multipliers and
    the unscaled paper-profile values are kept alongside for reference.
    '''

    n: int = 1
    '''Defines the dimension of the strings.'''

    alphabet_size: int = 2
    '''Defines the size of the alphabet.'''

    eps1: float = 0.0
    '''Defines the closeness parameter ε1.'''

    eps2: float = 1.0
    '''Defines the farness parameter ε2.'''

    gamma: float = 0.5
    '''Defines the gap γ = (ε2 - ε1)/2.'''

    eps_eval: float = 0.0625
    '''Defines the accuracy γ/8 of the point evaluator.'''

    m: int = 1
    '''Defines the number of outer samples.'''

    t: int = 1
    '''Defines the number of median repetitions.'''

    k: int = 1
    '''Defines the successes per coordinate of the point evaluator.'''

    theta: float = 0.0
    '''Defines the taming parameter θ.'''

    mode: str = types.HYPERCUBE
    '''Defines the taming mode.'''

    budget: int = 1
    '''Defines the query budget M, or M·|Σ| on the hypergrid.'''

    budget_hypercube: int = 1
    '''Defines the query budget M before the hypergrid factor |Σ|.'''

    profile: str = types.PAPER_PROFILE
    '''Defines the profile, paper or engineering.'''

    scales: dict = {}
    '''Defines the engineering multipliers of m, t and k.'''

    paper: dict = {}
    '''Defines the unscaled paper values of m, t, k and M.'''

    @property
    def threshold (self) -> float:
        '''
        Returns the acceptance threshold (ε1 + ε2)/2 on the distance estimate.

        :returns:   The threshold
        :rtype:     float
        '''

        return (self.eps1 + self.eps2) / 2.0

    def export (self) -> dict:
        return {
            "n": self.n,
            "alphabet_size": self.alphabet_size,
            "eps1": self.eps1,
            "eps2": self.eps2,
            "gamma": self.gamma,
            "eps_eval": self.eps_eval,
            "m": self.m,
            "t": self.t,
            "k": self.k,
            "theta": self.theta,
            "mode": self.mode,
            "M": self.budget,
            "M_hypercube": self.budget_hypercube,
            "profile": self.profile,
            "scales": dict(self.scales),
            "paper": dict(self.paper),
        }

    @classmethod
    def load (cls, data: dict) -> TesterParams:
        '''
        Restores parameters from their exported dictionary.

        :param data:    The exported parameters
        :type data:     dict

        :returns:       The parameters
        :rtype:         TesterParams
        '''

        params = cls()
        for key in ("n", "alphabet_size", "m", "t", "k"):
            setattr(params, key, int(data[key]))
        for key in ("eps1", "eps2", "gamma", "eps_eval", "theta"):
            setattr(params, key, float(data[key]))
        params.mode = data["mode"]
        params.profile = data["profile"]
        params.budget = int(data["M"])
        params.budget_hypercube = int(data["M_hypercube"])
        params.scales = dict(data.get("scales", {}))
        params.paper = dict(data.get("paper", {}))
        return params

    def __eq__ (self, other: object) -> bool:
        return isinstance(other, TesterParams) and other.export() == self.export()

    def __repr__ (self) -> str:
        return f"TesterParams(n={self.n}, gamma={self.gamma}, m={self.m}, t={self.t}, k={self.k}, M={self.budget})"


def samples_for (gamma: float) -> int:
    '''
    Returns the number of outer samples m = ceil(2^4 ln(20) / γ²).

    :param gamma:   The gap γ
    :type gamma:    float

    :returns:       The number of outer samples
    :rtype:         int
    '''

    return ceil_int(constants.SAMPLES_FACTOR * math.log(constants.SAMPLES_LOG_ARGUMENT) / (gamma * gamma))

def repeats_for (m: int) -> int:
    '''
    Returns the number of median repetitions t = ceil(48 ln(10m)).

    :param m:   The number of outer samples
    :type m:    int

    :returns:   The number of repetitions
    :rtype:     int
    '''

    return ceil_int(constants.REPEATS_FACTOR * math.log(constants.REPEATS_LOG_FACTOR * m))

def budget_terms (n: int, m: int, t: int, gamma: float) -> tuple:
    '''
    Returns the two terms of the query budget before the Markov factor: the
    queries spent on the tamed distribution, 2^10 n³mt/γ³, and on the
    sampled distribution, 2^9 n²mt/γ².

    :param n:       The dimension of the strings
    :type n:        int
    :param m:       The number of outer samples
    :type m:        int
    :param t:       The number of median repetitions
    :type t:        int
    :param gamma:   The gap γ
    :type gamma:    float

    :returns:       The tamed and sampled terms
    :rtype:         tuple
    '''

    tamed = constants.BUDGET_TAMED_FACTOR * n ** 3 * m * t / gamma ** 3
    sampled = constants.BUDGET_SAMPLED_FACTOR * n ** 2 * m * t / gamma ** 2
    return (tamed, sampled)

def budget_for (n: int, m: int, t: int, gamma: float, factor: float = 1.0) -> int:
    '''
    Returns the query budget M = ceil(10 (2^10 n³mt/γ³ + 2^9 n²mt/γ²)),
    optionally multiplied by a factor.

    :param n:       The dimension of the strings
    :type n:        int
    :param m:       The number of outer samples
    :type m:        int
    :param t:       The number of median repetitions
    :type t:        int
    :param gamma:   The gap γ
    :type gamma:    float
    :param factor:  A factor on the budget
    :type factor:   float

    :returns:       The query budget
    :rtype:         int
    '''

    tamed, sampled = budget_terms(n, m, t, gamma)
    return ceil_int(constants.BUDGET_MARKOV_FACTOR * (tamed + sampled) * factor)

def derive_params (n: int, alphabet: any, eps1: float, eps2: float, profile: str = types.PAPER_PROFILE,
        m_scale: float = constants.DEFAULT_M_SCALE, t_scale: float = constants.DEFAULT_T_SCALE,
        k_scale: float = constants.DEFAULT_K_SCALE, theta: float = None, mode: str = None) -> TesterParams:
    '''
    Derives the constants of the tolerant tester. The gap, m, t and k are
    computed first and the budget last, as it depends on them. Logarithms
    are natural and every count is rounded up.

    Under the engineering profile m, t and k are each multiplied by their
    scale and rounded up, to at least one. The budget is then computed from
    the scaled m and t and multiplied by the ratio of the scaled to the
    paper k, since the expected queries grow linearly in k.

    :param n:           The dimension of the strings
    :type n:            int
    :param alphabet:    The alphabet, or its size
    :type alphabet:     any
    :param eps1:        The closeness parameter, in [0, 1)
    :type eps1:         float
    :param eps2:        The farness parameter, in (ε1, 1]
    :type eps2:         float
    :param profile:     The profile, paper or engineering
    :type profile:      str
    :param m_scale:     The engineering multiplier of m, in (0, 1]
    :type m_scale:      float
    :param t_scale:     The engineering multiplier of t, in (0, 1]
    :type t_scale:      float
    :param k_scale:     The engineering multiplier of k, in (0, 1]
    :type k_scale:      float
    :param theta:       An override of the taming parameter
    :type theta:        float
    :param mode:        The taming mode, or None to pick it from the alphabet
    :type mode:         str

    :returns:           The derived parameters
    :rtype:             TesterParams
    '''

    alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    if int(n) != n or n < 1:
        raise InvalidParameter(f"The dimension must be a positive integer, got {n}.")
    eps1, eps2 = float(eps1), float(eps2)
    if not (0.0 <= eps1 < eps2 <= 1.0):
        raise InvalidParameter(f"The parameters must satisfy 0 <= ε1 < ε2 <= 1, got ε1 = {eps1} and ε2 = {eps2}.")
    if profile not in types.PROFILES:
        raise InvalidParameter(f"Unknown profile '{profile}'; expected one of {types.PROFILES}.")
    mode = (types.HYPERCUBE if alphabet.is_hypercube else types.HYPERGRID) if mode is None else mode
    if mode not in types.TAMING_MODES:
        raise InvalidParameter(f"Unknown taming mode '{mode}'; expected one of {types.TAMING_MODES}.")

    params = TesterParams()
    params.n = int(n)
    params.alphabet_size = alphabet.size
    params.eps1 = eps1
    params.eps2 = eps2
    params.profile = profile
    params.mode = mode
    params.gamma = (eps2 - eps1) / 2.0
    params.eps_eval = params.gamma / constants.EVAL_ACCURACY_DIVISOR

    # Unscaled m, t and k of the paper profile
    m = samples_for(params.gamma)
    t = repeats_for(m)
    k = ceil_int(constants.EVAL_SAMPLES_FACTOR * params.n / (params.eps_eval * params.eps_eval))
    params.paper = {"m": m, "t": t, "k": k, "M": budget_for(params.n, m, t, params.gamma)}

    # The scaled values of the engineering profile
    if profile == types.ENGINEERING_PROFILE:
        for name, scale in (("m_scale", m_scale), ("t_scale", t_scale), ("k_scale", k_scale)):
            if not (0.0 < float(scale) <= 1.0):
                raise InvalidParameter(f"The multiplier {name} must lie in (0, 1], got {scale}.")
        params.scales = {"m": float(m_scale), "t": float(t_scale), "k": float(k_scale)}
        params.m = max(1, ceil_int(m * m_scale))
        params.t = max(1, ceil_int(t * t_scale))
        params.k = max(1, ceil_int(k * k_scale))
        params.budget_hypercube = budget_for(params.n, params.m, params.t, params.gamma, params.k / k)
    else:
        params.scales = {}
        params.m, params.t, params.k = m, t, k
        params.budget_hypercube = params.paper["M"]

    # The hypergrid pays a factor |Σ| on the budget and on the taming parameter
    if mode == types.HYPERGRID:
        params.budget = params.budget_hypercube * alphabet.size
        default_theta = params.gamma / (2.0 * alphabet.size * params.n)
    else:
        params.budget = params.budget_hypercube
        default_theta = params.gamma / (2.0 * params.n)
    params.theta = default_theta if theta is None else float(theta)
    if not (0.0 < params.theta < 0.5):
        raise InvalidParameter(f"The taming parameter must lie in (0, 1/2), got {params.theta}.")

    printer.log(f"Derived {params!r} under the {profile} profile.")
    return params
