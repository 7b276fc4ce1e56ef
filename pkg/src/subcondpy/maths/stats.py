#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module contains public methods that aid with the statistical
calculations used by the estimators and the validation harness. These
include order statistics, confidence intervals and goodness of fit.
'''

from typing import Tuple
import numpy as np
from scipy import stats
from ..utils import InvalidParameter


def lower_median (values: any) -> float:
    '''
    Returns the median of a nonempty sequence. For an even number of
    values the lower of the two middle elements is returned, so the result
    is always one of the observed values.

    :param values:  The values to take the median of
    :type values:   any

    :returns:       The lower median
    :rtype:         float
    '''

    array = np.sort(np.asarray(values, dtype=np.float64))
    if array.size == 0:
        raise InvalidParameter("The median of an empty sequence is undefined.")
    return float(array[(array.size - 1) // 2])


def wilson_interval (successes: int, trials: int, confidence: float = 0.99) -> Tuple[float, float]:
    '''
    Computes the Wilson score interval for a binomial proportion at the
    given two-sided confidence.

    :param successes:   The number of successful trials
    :type successes:    int
    :param trials:      The total number of trials
    :type trials:       int
    :param confidence:  The two-sided confidence level
    :type confidence:   float

    :returns:           The lower and upper bounds of the interval
    :rtype:             Tuple[float, float]
    '''

    if trials <= 0:
        raise InvalidParameter(f"A confidence interval requires a positive number of trials, got {trials}.")
    z = float(stats.norm.ppf(0.5 + confidence / 2.0))
    p = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2.0 * trials)) / denom
    margin = z * np.sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials)) / denom
    return (max(0.0, center - margin), min(1.0, center + margin))


def standard_error (values: any) -> float:
    '''
    Returns the standard error of the sample mean, using the unbiased
    sample standard deviation.

    :param values:  The sample
    :type values:   any

    :returns:       The standard error of the mean
    :rtype:         float
    '''

    array = np.asarray(values, dtype=np.float64)
    if array.size < 2:
        return 0.0
    return float(array.std(ddof=1) / np.sqrt(array.size))


def chi_square_pvalue (counts: any, probabilities: any) -> float:
    '''
    Runs a chi-square goodness-of-fit test of observed counts against
    expected probabilities. Cells with zero expected probability must have
    zero counts and are dropped before the test; any count on such a cell
    gives a p-value of zero.

    :param counts:          The observed counts per cell
    :type counts:           any
    :param probabilities:   The expected probability per cell
    :type probabilities:    any

    :returns:               The p-value of the test
    :rtype:                 float
    '''

    counts = np.asarray(counts, dtype=np.float64)
    probabilities = np.asarray(probabilities, dtype=np.float64)
    support = probabilities > 0
    if np.any(counts[~support] > 0):
        return 0.0
    counts = counts[support]
    if counts.size < 2:
        return 1.0
    expected = probabilities[support] / probabilities[support].sum() * counts.sum()
    return float(stats.chisquare(counts, expected).pvalue)


def log_log_slope (x: any, y: any) -> float:
    '''
    Fits a straight line through (log x, log y) by least squares and
    returns its slope, the empirical scaling exponent.

    :param x:   The positive abscissae
    :type x:    any
    :param y:   The positive ordinates
    :type y:    any

    :returns:   The slope of the fitted line
    :rtype:     float
    '''

    slope, _ = np.polyfit(np.log(np.asarray(x, dtype=np.float64)), np.log(np.asarray(y, dtype=np.float64)), 1)
    return float(slope)


def variance_standard_error (values: any) -> float:
    '''
    Returns the large-sample standard error of the unbiased sample
    variance, estimated from the fourth central moment.

    :param values:  The sample
    :type values:   any

    :returns:       The standard error of the sample variance
    :rtype:         float
    '''

    array = np.asarray(values, dtype=np.float64)
    if array.size < 2:
        return 0.0
    centred = array - array.mean()
    variance = float(np.mean(centred ** 2))
    fourth = float(np.mean(centred ** 4))
    return float(np.sqrt(max(0.0, fourth - variance * variance) / array.size))
