#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

'''
This module creates models from their JSON documents, from short
specification strings used on the command line, and at random from a seed.
'''

import json
import os
import numpy as np
from ..maths import constants
from ..oracle import Alphabet
from ..utils import printer, types, helper, ConfigError, DomainTooLarge
from .model import DistributionModel
from .explicit import ExplicitDistribution
from .product import ProductDistribution, uniform, point_mass
from .chain import ChainDistribution


def from_document (document: dict) -> DistributionModel:
    '''
    Creates a model from its JSON document with the fields kind, n,
    alphabet_size and payload. The payload is the flat mass array for
    explicit models, the list of marginal vectors for product models and
    an object with the initial vector and transitions for chain models.

    :param document:    The model document
    :type document:     dict

    :returns:           The model
    :rtype:             DistributionModel
    '''

    if not isinstance(document, dict):
        raise ConfigError("A model document must be a JSON object.")
    missing = [key for key in ("kind", "n", "alphabet_size", "payload") if key not in document]
    if len(missing) > 0:
        raise ConfigError(f"The model document is missing the fields {missing}.")

    kind = document["kind"]
    alphabet = Alphabet(document["alphabet_size"])
    payload = document["payload"]
    if kind == types.EXPLICIT:
        model = ExplicitDistribution(payload, alphabet)
    elif kind == types.PRODUCT:
        model = ProductDistribution(payload, alphabet)
    elif kind == types.CHAIN:
        if not isinstance(payload, dict) or "initial" not in payload or "transitions" not in payload:
            raise ConfigError("A chain payload requires the fields 'initial' and 'transitions'.")
        model = ChainDistribution(payload["initial"], payload["transitions"], alphabet)
    else:
        raise ConfigError(f"Unknown model kind '{kind}'; expected one of {types.MODEL_KINDS}.")

    if model.n != int(document["n"]):
        raise ConfigError(f"The payload describes n = {model.n} but the document states n = {document['n']}.")
    return model

def random_model (kind: str, n: int, alphabet: any = 2, seed: int = 0) -> DistributionModel:
    '''
    Draws a random model from a seed. Every probability vector is drawn
    from a symmetric Dirichlet distribution with concentration one, which
    gives nondegenerate fixtures: the full mass table for explicit models,
    each coordinate marginal for product models, and the initial vector and
    every transition row for chain models.

    :param kind:        The model kind
    :type kind:         str
    :param n:           The dimension of the strings
    :type n:            int
    :param alphabet:    The alphabet, or its size
    :type alphabet:     any
    :param seed:        The seed of the draw
    :type seed:         int

    :returns:           The random model
    :rtype:             DistributionModel
    '''

    alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)
    generator = helper.create_generator(seed)
    n = int(n)
    size = alphabet.size
    if kind == types.EXPLICIT:
        if size ** n > constants.MAX_DOMAIN_SIZE:
            raise DomainTooLarge(f"An explicit model over {size}^{n} strings exceeds the enumeration guard.")
        model = ExplicitDistribution(generator.dirichlet(np.ones(size ** n)), alphabet)
    elif kind == types.PRODUCT:
        model = ProductDistribution(generator.dirichlet(np.ones(size), size=n), alphabet)
    elif kind == types.CHAIN:
        initial = generator.dirichlet(np.ones(size))
        transitions = generator.dirichlet(np.ones(size), size=(n - 1, size)) if n > 1 else []
        model = ChainDistribution(initial, transitions, alphabet)
    else:
        raise ConfigError(f"Unknown model kind '{kind}'; expected one of {types.MODEL_KINDS}.")
    printer.success(f"Random {kind} model over {size}^{n} strings drawn from seed {seed}.")
    return model

def from_spec (text: str) -> DistributionModel:
    '''
    Creates a model from a short specification string of the form
    'name:key=value,...'. The names are 'uniform' (keys n, a), 'point'
    (keys n, s, a) and 'random' (keys kind, n, a, seed). The alphabet size
    a defaults to two. For alphabets above ten symbols, the symbols of s
    are separated by dots.

    :param text:    The specification string
    :type text:     str

    :returns:       The model
    :rtype:         DistributionModel
    '''

    name, _, body = text.partition(":")
    options = {}
    for item in filter(None, (part.strip() for part in body.split(","))):
        key, sep, value = item.partition("=")
        if sep == "":
            raise ConfigError(f"Malformed option '{item}' in the model spec '{text}'.")
        options[key.strip()] = value.strip()

    try:
        alphabet = Alphabet(int(options.get("a", 2)))
        if name == "uniform":
            return uniform(int(options["n"]), alphabet)
        if name == "point":
            model = point_mass(options["s"].replace(".", ","), alphabet)
            if "n" in options and int(options["n"]) != model.n:
                raise ConfigError(f"The point '{options['s']}' does not have length {options['n']}.")
            return model
        if name == "random":
            return random_model(options.get("kind", types.EXPLICIT), int(options["n"]), alphabet, int(options.get("seed", 0)))
    except KeyError as error:
        raise ConfigError(f"The model spec '{text}' is missing the option {error}.")
    except ValueError as error:
        raise ConfigError(f"The model spec '{text}' has an invalid value: {error}.")
    raise ConfigError(f"Unknown model spec '{name}'; expected 'uniform', 'point' or 'random'.")

def resolve_model (reference: any) -> DistributionModel:
    '''
    Resolves a model reference as used by the scenario configuration. The
    reference may be a model, a model document, an inline JSON document,
    a specification string or a path to a JSON file.

    :param reference:   The model reference
    :type reference:    any

    :returns:           The model
    :rtype:             DistributionModel
    '''

    if isinstance(reference, DistributionModel):
        return reference
    if isinstance(reference, dict):
        return from_document(reference)
    if not isinstance(reference, str) or reference.strip() == "":
        raise ConfigError(f"Cannot resolve the model reference {reference!r}.")

    text = reference.strip()
    if text.startswith("{"):
        try:
            return from_document(json.loads(text))
        except json.JSONDecodeError as error:
            raise ConfigError(f"The inline model document is not valid JSON: {error}.")
    if text.split(":", 1)[0] in ("uniform", "point", "random") and not os.path.exists(text):
        return from_spec(text)
    return load_model(text)

def load_model (path: str) -> DistributionModel:
    '''
    Loads a model from a JSON file.

    :param path:    The path to the file
    :type path:     str

    :returns:       The model
    :rtype:         DistributionModel
    '''

    if not os.path.isfile(path):
        raise ConfigError(f"The model file '{path}' does not exist.")
    try:
        with open(path, "r") as file:
            document = json.load(file)
    except json.JSONDecodeError as error:
        raise ConfigError(f"The model file '{path}' is not valid JSON: {error}.")
    model = from_document(document)
    printer.success(f"Loaded a {model.kind} model over {model.alphabet.size}^{model.n} strings from '{path}'.")
    return model

def save_model (model: DistributionModel, path: str) -> None:
    '''
    Saves a model to a JSON file.

    :param model:   The model to save
    :type model:    DistributionModel
    :param path:    The path to the file
    :type path:     str
    '''

    with open(path, "w") as file:
        file.write(helper.to_json(model.export()))
    printer.success(f"Saved the {model.kind} model to '{path}'.")
