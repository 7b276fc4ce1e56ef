#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module defines the fields and types of every JSON document written by
the command line, and validates documents against them before they are
written.
'''

from ..utils import ConfigError


MODEL_SCHEMA: dict = {"kind": str, "n": int, "alphabet_size": int, "payload": (list, dict)}
'''The fields of a model document.'''

REPORT_SCHEMA: dict = {
    "verdict": str, "Z": float, "threshold": float, "gamma_entries": list, "samples": list,
    "p_estimates": list, "q_estimates": list, "queries_P": int, "queries_Q": int,
    "budget_exceeded": bool, "params": dict, "seed": (int, type(None)),
}
'''The fields of a run report.'''

TEST_SCHEMA: dict = {"scenario": dict, "runs": list, "aggregate": dict}
'''The fields of the output of the test command.'''

AGGREGATE_SCHEMA: dict = {"trials": int, "accept_rate": float, "mean_queries": float,
    "budget_exceeded": int, "params": dict}
'''The fields of the aggregate of the test command.'''

EVAL_POINT_SCHEMA: dict = {
    "sigma": str, "eps": float, "k": int, "guaranteed": bool, "trials": int, "seed": int, "truth": float,
    "estimates": list, "success_rate": (float, type(None)), "success_criterion": str,
    "mean_queries": (float, type(None)), "expected_queries": (float, type(None)),
}
'''The fields of the output of the eval-point command.'''

TAME_CHECK_SCHEMA: dict = {"tv": float, "bound": float, "marginal_min": float, "marginal_max": float,
    "mode": str, "theta": float, "pass": bool}
'''The fields of the output of the tame-check command.'''

SCORECARD_SCHEMA: dict = {"seed": int, "checks": list, "passed": bool}
'''The fields of the scorecard of the verify command.'''

CHECK_SCHEMA: dict = {"name": str, "kind": str, "trials": int, "observed": float, "claimed": float,
    "margin": float, "pass": bool}
'''The fields of one check of a scorecard.'''


def _matches (value: any, expected: any) -> bool:
    expected = expected if isinstance(expected, tuple) else (expected,)
    if isinstance(value, bool) and bool not in expected:
        return False
    if float in expected and isinstance(value, int) and not isinstance(value, bool):
        return True
    return isinstance(value, expected)

def validate (document: dict, schema: dict, name: str = "document") -> dict:
    '''
    Validates that a document holds every field of a schema with the right
    type. Integers are accepted where floats are expected, but booleans are
    only accepted where they are expected.

    :param document:    The document to validate
    :type document:     dict
    :param schema:      The fields and their types
    :type schema:       dict
    :param name:        The name used in the error message
    :type name:         str

    :returns:           The document
    :rtype:             dict
    '''

    if not isinstance(document, dict):
        raise ConfigError(f"The {name} must be a JSON object.")
    for field, expected in schema.items():
        if field not in document:
            raise ConfigError(f"The {name} is missing the field '{field}'.")
        if not _matches(document[field], expected):
            raise ConfigError(f"The field '{field}' of the {name} has the type {type(document[field]).__name__}.")
    return document

def validate_test_output (document: dict) -> dict:
    '''
    Validates the output of the test command, with every run report and
    the aggregate.

    :param document:    The output of the test command
    :type document:     dict

    :returns:           The document
    :rtype:             dict
    '''

    validate(document, TEST_SCHEMA, "test output")
    validate(document["aggregate"], AGGREGATE_SCHEMA, "aggregate")
    for report in document["runs"]:
        validate(report, REPORT_SCHEMA, "run report")
    return document

def validate_scorecard (document: dict) -> dict:
    '''
    Validates the scorecard of the verify command, with every check.

    :param document:    The scorecard
    :type document:     dict

    :returns:           The document
    :rtype:             dict
    '''

    validate(document, SCORECARD_SCHEMA, "scorecard")
    for check in document["checks"]:
        validate(check, CHECK_SCHEMA, "check")
    return document
