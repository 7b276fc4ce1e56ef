#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from .config import ScenarioConfig
from .commands import cmd_gen_model, cmd_eval_point, cmd_tame_check, cmd_test, cmd_bench, cmd_verify, write_output
from .main import build_parser, main, EXIT_SUCCESS, EXIT_REJECT, EXIT_CONFIG, EXIT_FAILURE
