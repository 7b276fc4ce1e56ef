#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module contains public methods that aid with the integer rounding
of the tester constants and with comparing floating point quantities.
'''

import math
import numpy as np


def ceil_int (value: float, digits: int = 9) -> int:
    '''
    Rounds a value up to the next integer, after first rounding it to a
    number of decimal digits. This keeps quantities such as 4n/ε² that are
    mathematically integral but carry floating point noise (64.00000000001)
    from being pushed up to the next integer.

    :param value:   The value to round up
    :type value:    float
    :param digits:  The number of decimal digits kept before rounding up
    :type digits:   int

    :returns:       The smallest integer not below the value
    :rtype:         int
    '''

    return int(math.ceil(round(float(value), digits)))


def relative_variance (values: any) -> float:
    '''
    Returns the variance of a sample divided by the square of its mean,
    the quantity bounded for the product of the normalised trial counts.

    :param values:  The sample
    :type values:   any

    :returns:       The relative variance
    :rtype:         float
    '''

    array = np.asarray(values, dtype=np.float64)
    mean = float(array.mean())
    return float(array.var(ddof=1) / (mean * mean))


def within_relative (value: float, target: float, tolerance: float) -> bool:
    '''
    Returns whether a value lies within a relative tolerance of a target.

    :param value:       The value to check
    :type value:        float
    :param target:      The target value
    :type target:       float
    :param tolerance:   The relative tolerance
    :type tolerance:    float

    :returns:           A flag whether |value - target| <= tolerance * |target|
    :rtype:             bool
    '''

    return abs(float(value) - float(target)) <= float(tolerance) * abs(float(target))
