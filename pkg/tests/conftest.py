#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import pytest
from subcondpy import ExplicitDistribution, ProductDistribution, ChainDistribution, uniform, point_mass
from subcondpy.utils import printer


@pytest.fixture(autouse=True)
def quiet_printer ():
    printer.set_verbosity(None)
    yield
    printer.set_verbosity(None)


@pytest.fixture
def table_model () -> ExplicitDistribution:
    '''Masses 0.1, 0.2, 0.3 and 0.4 on 00, 01, 10 and 11.'''
    return ExplicitDistribution([0.1, 0.2, 0.3, 0.4])


@pytest.fixture
def skewed_product () -> ProductDistribution:
    return ProductDistribution([[0.2, 0.8]] * 3)


@pytest.fixture
def chain_model () -> ChainDistribution:
    return ChainDistribution([0.4, 0.6], [[[0.7, 0.3], [0.2, 0.8]], [[0.5, 0.5], [0.1, 0.9]]])


@pytest.fixture
def uniform3 () -> ProductDistribution:
    return uniform(3)


@pytest.fixture
def point00 () -> ProductDistribution:
    return point_mass("00")
