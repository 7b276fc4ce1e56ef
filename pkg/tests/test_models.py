#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import itertools
import json
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from subcondpy import ExplicitDistribution, ProductDistribution, ChainDistribution, uniform, point_mass, \
    random_model, load_model, save_model, exact_tv
from subcondpy.models import from_document, from_spec, resolve_model
from subcondpy.utils import types, helper, ConfigError, DomainMismatch, DomainTooLarge, InvalidParameter, \
    InvalidPrefix


def test_uniform_marginal ():
    model = uniform(3)
    for prefix in ("", "0", "11"):
        assert model.marginal(prefix, 1) == pytest.approx(0.5)


def test_product_marginal_ignores_prefix ():
    model = ProductDistribution([[0.2, 0.8]] * 3)
    assert model.marginal("0", 0) == pytest.approx(0.2)


def test_explicit_marginal_is_subcube_ratio (table_model):
    assert table_model.marginal("1", 1) == pytest.approx(0.4 / 0.7)
    assert table_model.marginal("", 0) == pytest.approx(0.3)


def test_marginal_of_full_prefix_fails (table_model):
    with pytest.raises(InvalidPrefix):
        table_model.marginal("01", 0)


def test_zero_mass_prefix_is_uniform ():
    model = ExplicitDistribution([0.5, 0.5, 0.0, 0.0])
    assert np.allclose(model.marginal_vector((1,)), [0.5, 0.5])
    assert np.allclose(point_mass("00").marginal_vector((1,)), [0.5, 0.5])


def test_point_probability_examples (table_model):
    assert uniform(4).point_probability("0110") == pytest.approx(1.0 / 16.0)
    assert point_mass("11").point_probability("10") == 0.0
    assert table_model.point_probability("10") == pytest.approx(0.3)


def test_explicit_rejects_bad_tables ():
    with pytest.raises(InvalidParameter):
        ExplicitDistribution([0.5, 0.6])
    with pytest.raises(InvalidParameter):
        ExplicitDistribution([0.2, 0.3, 0.5])
    with pytest.raises(InvalidParameter):
        ExplicitDistribution([1.5, -0.5])


def test_product_rejects_bad_rows ():
    with pytest.raises(InvalidParameter):
        ProductDistribution([[0.3, 0.3]])


def test_chain_probability (chain_model):
    assert chain_model.n == 3
    assert chain_model.point_probability("011") == pytest.approx(0.4 * 0.3 * 0.9)
    assert chain_model.marginal("01", 1) == pytest.approx(0.9)


@pytest.mark.parametrize("kind", types.MODEL_KINDS)
def test_chain_rule_agrees_everywhere (kind):
    model = random_model(kind, 3, 3, seed=5)
    for string in itertools.product(range(3), repeat=3):
        assert model.chain_rule_probability(string) == pytest.approx(model.point_probability(string), abs=1e-12)


@pytest.mark.parametrize("kind", types.MODEL_KINDS)
def test_probability_table_sums_to_one (kind):
    model = random_model(kind, 4, 2, seed=9)
    assert model.probability_table().shape == (2,) * 4
    assert model.probability_table().sum() == pytest.approx(1.0)


def test_sample_exact_frequencies (table_model):
    generator = np.random.default_rng(4)
    counts = {}
    for _ in range(20000):
        string = table_model.sample_exact(generator)
        counts[string] = counts.get(string, 0) + 1
    for string, mass in zip([(0, 0), (0, 1), (1, 0), (1, 1)], [0.1, 0.2, 0.3, 0.4]):
        assert abs(counts[string] / 20000 - mass) < 0.015


def test_exact_tv_examples (uniform3, point00):
    assert exact_tv(uniform3, uniform3) == 0.0
    assert exact_tv(point00, point_mass("11")) == pytest.approx(1.0)
    assert exact_tv(uniform(2), point00) == pytest.approx(0.75)
    assert exact_tv(uniform3, point_mass("000")) == pytest.approx(7.0 / 8.0)


def test_exact_tv_domain_mismatch (uniform3, point00):
    with pytest.raises(DomainMismatch):
        exact_tv(uniform3, point00)
    with pytest.raises(DomainMismatch):
        exact_tv(uniform(2), uniform(2, 3))


def test_enumeration_guard ():
    with pytest.raises(DomainTooLarge):
        uniform(30).require_enumerable()


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=2, max_value=3), st.integers(min_value=0, max_value=2**32))
def test_tv_is_symmetric_and_bounded (n, size, seed):
    p = random_model(types.EXPLICIT, n, size, seed)
    q = random_model(types.PRODUCT, n, size, seed + 1)
    distance = exact_tv(p, q)
    assert 0.0 <= distance <= 1.0
    assert distance == pytest.approx(exact_tv(q, p))


def test_random_model_is_seeded ():
    first = random_model(types.CHAIN, 4, 2, seed=42).probability_table()
    second = random_model(types.CHAIN, 4, 2, seed=42).probability_table()
    assert np.array_equal(first, second)


def test_random_model_unknown_kind ():
    with pytest.raises(ConfigError):
        random_model("mixture", 2, 2, 0)


@pytest.mark.parametrize("kind", types.MODEL_KINDS)
def test_document_restores_model (kind):
    model = random_model(kind, 3, 2, seed=1)
    document = json.loads(helper.to_json(model.export()))
    assert document["kind"] == kind
    restored = from_document(document)
    assert np.allclose(restored.probability_table(), model.probability_table())


def test_document_errors ():
    with pytest.raises(ConfigError):
        from_document({"kind": "explicit", "n": 1})
    with pytest.raises(ConfigError):
        from_document({"kind": "explicit", "n": 3, "alphabet_size": 2, "payload": [0.5, 0.5]})
    with pytest.raises(ConfigError):
        from_document({"kind": "chain", "n": 2, "alphabet_size": 2, "payload": [0.5, 0.5]})


def test_model_specs ():
    assert from_spec("uniform:n=3").n == 3
    assert from_spec("uniform:n=2,a=3").alphabet.size == 3
    assert from_spec("point:n=3,s=101").point_probability("101") == 1.0
    assert from_spec("random:kind=product,n=2,seed=4").kind == types.PRODUCT
    with pytest.raises(ConfigError):
        from_spec("point:n=2,s=101")
    with pytest.raises(ConfigError):
        from_spec("gaussian:n=2")
    with pytest.raises(ConfigError):
        from_spec("uniform:a=2")


def test_save_and_load_model (tmp_path, table_model):
    path = str(tmp_path / "model.json")
    save_model(table_model, path)
    restored = load_model(path)
    assert restored.point_probability("11") == pytest.approx(0.4)
    assert resolve_model(path).n == 2


def test_resolve_model_references (table_model):
    assert resolve_model(table_model) is table_model
    assert resolve_model(table_model.export()).n == 2
    assert resolve_model(helper.to_json(uniform(2).export())).point_probability("01") == pytest.approx(0.25)
    assert resolve_model("uniform:n=2").n == 2


def test_load_missing_model (tmp_path):
    with pytest.raises(ConfigError):
        load_model(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(ConfigError):
        load_model(str(broken))


def test_sample_exact_examples ():
    generator = np.random.default_rng(6)
    assert all(point_mass("101").sample_exact(generator) == (1, 0, 1) for _ in range(20))
    path = ChainDistribution([0.0, 1.0], [[[0.0, 1.0], [1.0, 0.0]], [[0.0, 1.0], [1.0, 0.0]]])
    assert all(path.sample_exact(generator) == (1, 0, 1) for _ in range(20))
    strings = [uniform(2).sample_exact(generator) for _ in range(10000)]
    for string in itertools.product(range(2), repeat=2):
        assert abs(strings.count(string) / 10000 - 0.25) <= 0.02


@pytest.mark.parametrize("kind", types.MODEL_KINDS)
def test_subcube_additivity (kind):
    model = random_model(kind, 3, 3, seed=8)
    for length in range(3):
        for prefix in itertools.product(range(3), repeat=length):
            children = sum(model.subcube_mass(prefix + (c,)) for c in range(3))
            assert children == pytest.approx(model.subcube_mass(prefix), abs=1e-12)


@pytest.mark.parametrize("kind", [types.PRODUCT, types.CHAIN])
def test_conversion_to_explicit (kind):
    model = random_model(kind, 3, 2, seed=2)
    explicit = model.to_explicit()
    assert exact_tv(model, explicit) == pytest.approx(0.0, abs=1e-9)
    for prefix in [(), (0,), (1, 1)]:
        assert np.allclose(explicit.marginal_vector(prefix), model.marginal_vector(prefix), atol=1e-9)


def test_tv_triangle_inequality ():
    p, q, r = (random_model(kind, 3, 2, seed=i) for i, kind in enumerate(types.MODEL_KINDS))
    assert exact_tv(p, r) <= exact_tv(p, q) + exact_tv(q, r) + 1e-12
    assert exact_tv(p, p) == 0.0
