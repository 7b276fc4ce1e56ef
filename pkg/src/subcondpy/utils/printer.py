#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module contains helper functions for printing lines to the console.
By default, only errors are printed. If the verbosity is raised, then
progress of the oracles, estimators and testers will be printed. All
lines are written to the standard error stream so that the JSON and CSV
reports written to the standard output remain machine readable.
'''

import sys
import datetime


LOG_VERBOSITY: str      = "log"
'''Defines the verbosity for all messages coming from the library, including per-run progress.'''

SUCCESS_VERBOSITY: str  = "success"
'''Defines the verbosity for all success messages and errors.'''

WARNING_VERBOSITY: str  = "warning"
'''Defines the verbosity for any warnings (such as budget exhaustion) or errors.'''

ERROR_VERBOSITY: str    = "error"
'''Defines the verbosity for only errors.'''

VERBOSITY_LEVELS: list = [LOG_VERBOSITY, SUCCESS_VERBOSITY, WARNING_VERBOSITY, ERROR_VERBOSITY]
'''All of the verbosity levels that enable the printer, from most to least verbose.'''

# ANSI colour of each message kind
__STYLES: dict = {
    LOG_VERBOSITY:      '\033[90m',
    SUCCESS_VERBOSITY:  '\033[32m',
    WARNING_VERBOSITY:  '\033[33m',
    ERROR_VERBOSITY:    '\033[31m',
    "debug":            '\033[35m',
}
__RESET: str = '\033[0m'

# Index into VERBOSITY_LEVELS; None disables the printer
__threshold: int = None

__display_time: bool = False


def set_verbosity (level: str) -> None:
    '''
    Sets the least severe kind of message that is still printed. Any value
    outside of VERBOSITY_LEVELS, including None and "none", silences the
    printer entirely.

    :param level:   The verbosity level
    :type level:    str
    '''

    global __threshold
    level = level.lower() if isinstance(level, str) else None
    __threshold = VERBOSITY_LEVELS.index(level) if level in VERBOSITY_LEVELS else None

def display_time (enable: bool) -> None:
    '''
    Defines whether each printed line is prefixed with a timestamp.

    :param enable:  A flag for enabling the timestamp
    :type enable:   bool
    '''

    global __display_time
    __display_time = bool(enable)

def __emit (kind: str, data: str) -> None:
    if __threshold is None:
        return
    if kind in VERBOSITY_LEVELS and VERBOSITY_LEVELS.index(kind) < __threshold:
        return
    if __display_time:
        stamp = datetime.datetime.now().strftime("%Y/%m/%d %H:%M:%S.%f")[:-3]
        data = f"[{stamp}] {data}"
    print(__STYLES[kind] + data + __RESET, file=sys.stderr)

def log (data: str) -> None:
    '''
    Prints progress of a run. Requires the LOG_VERBOSITY level.

    :param data:    The message
    :type data:     str
    '''

    __emit(LOG_VERBOSITY, data)

def success (data: str) -> None:
    '''
    Prints a completed step, such as a model being built or a command
    finishing. Requires SUCCESS_VERBOSITY or a more verbose level.

    :param data:    The message
    :type data:     str
    '''

    __emit(SUCCESS_VERBOSITY, data)

def warning (data: str) -> None:
    '''
    Prints a condition that a run recovers from, such as an exhausted
    budget turning into a Reject verdict.

    :param data:    The message
    :type data:     str
    '''

    __emit(WARNING_VERBOSITY, data)

def error (data: str) -> None:
    '''
    Prints an error. Shown at every level except when the printer is off.

    :param data:    The message
    :type data:     str
    '''

    __emit(ERROR_VERBOSITY, data)

def debug (data: str) -> None:
    '''
    Prints a debug message whenever the printer is enabled at all.

    :param data:    The message
    :type data:     str
    '''

    __emit("debug", data)

def fatal (data: str) -> None:
    '''
    Prints the message that ends a command. Unlike the other kinds, it is
    written even when the printer is disabled.

    :param data:    The message
    :type data:     str
    '''

    print(__STYLES[ERROR_VERBOSITY] + data + __RESET, file=sys.stderr)

# Errors only, with timestamps
set_verbosity(ERROR_VERBOSITY)
display_time(True)
