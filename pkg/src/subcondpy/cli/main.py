#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module holds the entry point of the 'subcondpy' command line. The
subcommands are gen-model, eval-point, tame-check, test, bench and verify.
Reports are written to the standard output or to the path given by --out,
and diagnostics go to the standard error. The exit code is 0 on success,
1 when a single test run rejects or a check fails, 2 on a usage or
configuration error and 3 when a run fails, for instance when an evaluator
does not terminate within its trial cap.
'''

import argparse
import json
import sys
from typing import List
from ..maths import constants
from ..tester import TesterConfig
from ..utils import printer, types, SubcondException, ConfigError, InvalidParameter, InvalidPrefix, \
    DomainMismatch, DomainTooLarge
from ..verify import SUITE
from .config import ScenarioConfig
from . import commands


EXIT_SUCCESS: int = 0
'''The exit code of a successful command.'''

EXIT_REJECT: int = 1
'''The exit code of a single test run that rejects, or of a failed check.'''

EXIT_CONFIG: int = 2
'''The exit code of a usage or configuration error.'''

EXIT_FAILURE: int = 3
'''The exit code of a run that fails after its inputs were accepted.'''

# Errors in the inputs of a command, as opposed to failures while running it
USAGE_ERRORS: tuple = (ConfigError, InvalidParameter, InvalidPrefix, DomainMismatch, DomainTooLarge)


def _list_of_ints (text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers")

def _add_common (parser: argparse.ArgumentParser, trials: int = None) -> None:
    parser.add_argument("--seed", type=int, default=None if trials is None else 0, help="The master seed")
    parser.add_argument("--out", default=None, help="The output path; defaults to the standard output")
    parser.add_argument("--workers", type=int, default=None if trials is None else 1, help="The number of worker processes")
    if trials is not None:
        parser.add_argument("--trials", type=int, default=trials, help="The number of independent trials")

def _add_profile (parser: argparse.ArgumentParser, defaults: bool) -> None:
    parser.add_argument("--profile", choices=types.PROFILES,
        default=types.ENGINEERING_PROFILE if defaults else None, help="The profile of the tester constants")
    parser.add_argument("--m-scale", dest="m_scale", type=float,
        default=constants.DEFAULT_M_SCALE if defaults else None, help="The engineering multiplier of m")
    parser.add_argument("--t-scale", dest="t_scale", type=float,
        default=constants.DEFAULT_T_SCALE if defaults else None, help="The engineering multiplier of t")
    parser.add_argument("--k-scale", dest="k_scale", type=float,
        default=constants.DEFAULT_K_SCALE if defaults else None, help="The engineering multiplier of k")

def build_parser () -> argparse.ArgumentParser:
    '''
    Builds the argument parser of the command line.

    :returns:   The parser
    :rtype:     argparse.ArgumentParser
    '''

    parser = argparse.ArgumentParser(prog="subcondpy",
        description="Tolerant closeness testing of distributions under subcube conditioning.")
    parser.add_argument("--verbosity", choices=printer.VERBOSITY_LEVELS + ["none"], default="error",
        help="The level of the diagnostics written to the standard error")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen-model", help="Draw a random model from a seed")
    gen.add_argument("--kind", choices=types.MODEL_KINDS, default=types.EXPLICIT, help="The kind of model")
    gen.add_argument("--n", type=int, required=True, help="The dimension of the strings")
    gen.add_argument("--alphabet", type=int, default=2, help="The alphabet size")
    gen.add_argument("--seed", type=int, default=0, help="The seed of the draw")
    gen.add_argument("--out", default=None, help="The output path; defaults to the standard output")

    point = subparsers.add_parser("eval-point", help="Estimate the probability of one string repeatedly")
    point.add_argument("--model", required=True, help="A model file, inline JSON document or spec string")
    point.add_argument("--sigma", required=True, help="The full string to evaluate")
    point.add_argument("--eps", type=float, required=True, help="The relative accuracy, in (0, 1); guaranteed below 1/2")
    _add_common(point, trials=100)

    tame = subparsers.add_parser("tame-check", help="Check the taming bound on a model")
    tame.add_argument("--model", required=True, help="A model file, inline JSON document or spec string")
    tame.add_argument("--theta", type=float, required=True, help="The taming parameter, in (0, 1/2)")
    tame.add_argument("--mode", choices=types.TAMING_MODES, default=None, help="The taming mode")
    tame.add_argument("--out", default=None, help="The output path; defaults to the standard output")

    test = subparsers.add_parser("test", help="Run the tolerant tester on a scenario")
    test.add_argument("--config", default=None, help="A scenario JSON document; flags override its fields")
    test.add_argument("--p-model", dest="p_model", default=None, help="The model of P")
    test.add_argument("--q-model", dest="q_model", default=None, help="The model of Q")
    test.add_argument("--eps1", type=float, default=None, help="The closeness parameter ε1")
    test.add_argument("--eps2", type=float, default=None, help="The farness parameter ε2")
    test.add_argument("--theta", type=float, default=None, help="An override of the taming parameter")
    test.add_argument("--mode", choices=types.TAMING_MODES, default=None, help="An override of the taming mode")
    test.add_argument("--trials", type=int, default=None, help="The number of independent runs")
    _add_profile(test, defaults=False)
    _add_common(test)

    bench = subparsers.add_parser("bench", help="Measure the queries of the tester over a grid of dimensions")
    bench.add_argument("--ns", type=_list_of_ints, default=[2, 3, 4], help="Comma separated dimensions")
    bench.add_argument("--gamma", type=float, default=0.3, help="The gap γ, in (0, 1/2]")
    bench.add_argument("--runs", type=int, default=3, help="The number of runs per dimension")
    bench.add_argument("--alphabet", type=int, default=2, help="The alphabet size")
    _add_profile(bench, defaults=True)
    _add_common(bench, trials=None)

    verify = subparsers.add_parser("verify", help="Run the named validation suite")
    verify.add_argument("--checks", nargs="*", choices=list(SUITE.keys()), default=None,
        help="The names of the checks; defaults to all of them")
    _add_common(verify, trials=None)

    return parser

def run (args: argparse.Namespace) -> int:
    '''
    Dispatches parsed arguments to their command.

    :param args:    The parsed arguments
    :type args:     argparse.Namespace

    :returns:       The exit code of the command
    :rtype:         int
    '''

    if args.command == "gen-model":
        return commands.cmd_gen_model(args.kind, args.n, args.alphabet, args.seed, args.out)
    if args.command == "eval-point":
        return commands.cmd_eval_point(args.model, args.sigma, args.eps, args.trials, args.seed, args.out, args.workers)
    if args.command == "tame-check":
        return commands.cmd_tame_check(args.model, args.theta, args.mode, args.out)
    if args.command == "test":
        scenario = ScenarioConfig.load(args.config) if args.config is not None else ScenarioConfig()
        scenario.override(p_model=args.p_model, q_model=args.q_model, eps1=args.eps1, eps2=args.eps2,
            profile=args.profile, m_scale=args.m_scale, t_scale=args.t_scale, k_scale=args.k_scale,
            theta=args.theta, mode=args.mode, trials=args.trials, seed=args.seed, out=args.out,
            workers=args.workers)
        return commands.cmd_test(scenario)
    if args.command == "bench":
        config = TesterConfig(args.profile, args.m_scale, args.t_scale, args.k_scale)
        return commands.cmd_bench(args.ns, args.gamma, config, args.seed or 0, args.runs, args.out,
            args.workers or 1, args.alphabet)
    return commands.cmd_verify(args.checks, args.seed or 0, args.out, args.workers or 1)

def main (argv: List[str] = None) -> int:
    '''
    Parses the arguments and runs the command. Errors in the inputs exit
    with the code 2 and any other library error with the code 3; in both
    cases the message is written to the standard error, whatever the
    verbosity.

    :param argv:    The arguments, defaulting to those of the process
    :type argv:     List[str]

    :returns:       The exit code
    :rtype:         int
    '''

    args = build_parser().parse_args(argv)
    printer.set_verbosity(None if args.verbosity == "none" else args.verbosity)
    try:
        return run(args)
    except USAGE_ERRORS as error:
        printer.fatal(f"subcondpy {args.command}: {error}")
        return EXIT_CONFIG
    except SubcondException as error:
        printer.fatal(f"subcondpy {args.command}: {error}")
        return EXIT_FAILURE
    except (OSError, json.JSONDecodeError) as error:
        printer.fatal(f"subcondpy {args.command}: {error}")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
