#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module runs independent trial replicas, either in the current process
or fanned out over a pool of worker processes. Every replica receives its
index and derives its own seed from it, so the results do not depend on
the number of workers.
'''

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List
from ..utils import printer, InvalidParameter


def run_trials (trial_fn: Callable, trials: int, workers: int = 1) -> List[any]:
    '''
    Calls a trial function on the indices 0 to trials-1 and returns the
    results in index order. With more than one worker the function must be
    picklable, such as a module level function or a partial of one.

    :param trial_fn:    The trial function, called with the index
    :type trial_fn:     Callable
    :param trials:      The number of trials
    :type trials:       int
    :param workers:     The number of worker processes
    :type workers:      int

    :returns:           The result of every trial
    :rtype:             List[any]
    '''

    trials, workers = int(trials), int(workers)
    if trials < 1:
        raise InvalidParameter(f"The number of trials must be positive, got {trials}.")
    if workers < 1:
        raise InvalidParameter(f"The number of workers must be positive, got {workers}.")
    if workers == 1 or trials == 1:
        return [trial_fn(index) for index in range(trials)]

    printer.log(f"Running {trials} trials over {workers} worker processes.")
    chunksize = max(1, trials // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(trial_fn, range(trials), chunksize=chunksize))
