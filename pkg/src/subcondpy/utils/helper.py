#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This modules assists with some helper functions for serializing values
into JSON, deriving independent seeds for trial replicas and validating
probability vectors.
'''

import json
import hashlib
import numpy as np
from ..maths import constants
from .exception import InvalidParameter


def serialize (value: any) -> any:
    '''
    Serializes the value into a JSON serializable format. This will
    convert numpy arrays into lists and numpy scalars into their python
    equivalents. Dictionaries, lists and tuples are serialized recursively
    and objects with an 'export' method are exported.

    :param value:   The value to serialize
    :type value:    any

    :returns:       The serialized value
    :rtype:         any
    '''

    # Check if the value is a numpy array
    if isinstance(value, np.ndarray):
        return [serialize(v) for v in value.tolist()] if value.dtype == object else value.tolist()

    # Numpy scalars are converted to the python types
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)

    # Containers are converted recursively
    if isinstance(value, dict):
        return {str(k): serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]

    # Check if the value is one of the report classes
    if hasattr(value, "export"):
        return serialize(value.export())

    # Return the value as is for other types
    return value

def to_json (value: any) -> str:
    '''
    Serializes a value and dumps it to a JSON string with sorted keys so
    that reruns produce byte-identical text.

    :param value:   The value to dump
    :type value:    any

    :returns:       The JSON text
    :rtype:         str
    '''

    return json.dumps(serialize(value), indent=4, sort_keys=True)

def derive_seed (seed: int, index: int) -> int:
    '''
    Derives an independent 64-bit seed for a trial replica. The master seed
    is XOR-ed with the trial index and the result is hashed with BLAKE2b, so
    neighbouring indices produce unrelated streams.

    :param seed:    The master seed of the campaign
    :type seed:     int
    :param index:   The index of the trial replica
    :type index:    int

    :returns:       The seed for the replica
    :rtype:         int
    '''

    mixed: int = (int(seed) ^ int(index)) & constants.SEED_MASK
    digest = hashlib.blake2b(mixed.to_bytes(8, "little") + int(index).to_bytes(8, "little"), digest_size=8)
    return int.from_bytes(digest.digest(), "little")

def create_generator (seed: int) -> np.random.Generator:
    '''
    Creates a seeded pseudo-random generator. Every oracle and replica owns
    one of these.

    :param seed:    The 64-bit seed
    :type seed:     int

    :returns:       The generator
    :rtype:         np.random.Generator
    '''

    return np.random.default_rng(int(seed) & constants.SEED_MASK)

def validate_probability_vector (vector: any, name: str = "vector") -> np.ndarray:
    '''
    Validates that a vector is a nonnegative probability vector that sums
    to one within the normalisation tolerance, and returns it normalised
    by its sum.

    :param vector:  The candidate probability vector
    :type vector:   any
    :param name:    The name used in the error message
    :type name:     str

    :returns:       The normalised vector
    :rtype:         np.ndarray
    '''

    array = np.asarray(vector, dtype=np.float64)
    if array.ndim != 1 or array.size == 0:
        raise InvalidParameter(f"The {name} must be a nonempty one-dimensional vector.")
    if not np.all(np.isfinite(array)) or np.any(array < 0):
        raise InvalidParameter(f"The {name} must contain finite nonnegative probabilities.")
    total = float(array.sum())
    if abs(total - 1.0) > constants.SUM_TOLERANCE:
        raise InvalidParameter(f"The {name} sums to {total!r}, not one.")
    return array / total

def validate_open_interval (value: float, low: float, high: float, name: str) -> float:
    '''
    Validates that a value lies strictly within an open interval.

    :param value:   The value to check
    :type value:    float
    :param low:     The exclusive lower end
    :type low:      float
    :param high:    The exclusive upper end
    :type high:     float
    :param name:    The name used in the error message
    :type name:     str

    :returns:       The value as a float
    :rtype:         float
    '''

    value = float(value)
    if not (low < value < high):
        raise InvalidParameter(f"The {name} must lie in ({low}, {high}), got {value}.")
    return value
