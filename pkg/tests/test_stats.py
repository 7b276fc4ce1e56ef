#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import math
import numpy as np
import pytest
from hypothesis import given, strategies as st
from subcondpy.maths.stats import lower_median, wilson_interval, standard_error, chi_square_pvalue, \
    log_log_slope, variance_standard_error
from subcondpy.maths.utils import ceil_int, relative_variance, within_relative
from subcondpy.utils import InvalidParameter


def test_lower_median_odd ():
    assert lower_median([3.0, 1.0, 2.0]) == 2.0


def test_lower_median_even_takes_lower_middle ():
    assert lower_median([4.0, 1.0, 3.0, 2.0]) == 2.0


def test_lower_median_empty_raises ():
    with pytest.raises(InvalidParameter):
        lower_median([])


@given(st.lists(st.floats(allow_nan=False, allow_infinity=False, min_value=-1e6, max_value=1e6), min_size=1))
def test_lower_median_is_an_element (values):
    median = lower_median(values)
    assert median in values
    assert sum(v <= median for v in values) >= len(values) / 2


def test_wilson_interval_contains_rate ():
    low, high = wilson_interval(200, 300, 0.99)
    assert low < 200 / 300 < high
    assert 0.0 <= low and high <= 1.0


def test_wilson_interval_all_successes ():
    low, high = wilson_interval(300, 300, 0.99)
    assert high == pytest.approx(1.0)
    assert low > 2.0 / 3.0


def test_wilson_interval_needs_trials ():
    with pytest.raises(InvalidParameter):
        wilson_interval(0, 0)


def test_standard_error_of_constant_is_zero ():
    assert standard_error([5.0] * 10) == 0.0


def test_chi_square_accepts_exact_counts ():
    assert chi_square_pvalue([250, 250, 500], [0.25, 0.25, 0.5]) > 0.99


def test_chi_square_rejects_wrong_counts ():
    assert chi_square_pvalue([900, 50, 50], [1 / 3, 1 / 3, 1 / 3]) < 1e-6


def test_log_log_slope_of_cubic ():
    x = np.array([2.0, 3.0, 4.0, 5.0])
    assert log_log_slope(x, 7.0 * x ** 3) == pytest.approx(3.0)


def test_variance_standard_error_shrinks_with_size ():
    generator = np.random.default_rng(3)
    small = variance_standard_error(generator.normal(size=100))
    large = variance_standard_error(generator.normal(size=10000))
    assert large < small


def test_ceil_int_absorbs_rounding_noise ():
    assert ceil_int(4.0 * 4 / 0.0625 ** 2) == 4096
    assert ceil_int(16.000000000001) == 16
    assert ceil_int(16.2) == 17


def test_ceil_int_samples_for_full_gap ():
    assert ceil_int(16.0 * math.log(20.0) / 0.25) == 192


def test_relative_variance ():
    assert relative_variance([1.0, 1.0, 1.0]) == 0.0
    assert relative_variance([1.0, 3.0]) == pytest.approx(0.5)


def test_within_relative ():
    assert within_relative(1.04, 1.0, 0.05)
    assert not within_relative(1.06, 1.0, 0.05)
