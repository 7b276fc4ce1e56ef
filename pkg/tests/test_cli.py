#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import json
import pytest
from subcondpy.cli import main, commands, ScenarioConfig, EXIT_SUCCESS, EXIT_REJECT, EXIT_CONFIG, EXIT_FAILURE
from subcondpy.cli import schema
from subcondpy.utils import helper, types, ConfigError, NonterminationSuspected


FAST_SCALES = ["--m-scale", "0.02", "--t-scale", "0.01", "--k-scale", "0.005"]
'''Multipliers that keep an engineering run of the tester short.'''

SKEWED_PRODUCT = json.dumps({"kind": "product", "n": 3, "alphabet_size": 2, "payload": [[0.2, 0.8]] * 3})


def _run (tmp_path, *argv) -> tuple:
    out = tmp_path / "out.txt"
    code = main(list(argv) + ["--out", str(out)])
    return code, out.read_text() if out.exists() else None


def test_gen_model_is_seeded (tmp_path):
    code, first = _run(tmp_path, "gen-model", "--kind", "chain", "--n", "3", "--seed", "5")
    assert code == EXIT_SUCCESS
    _, second = _run(tmp_path, "gen-model", "--kind", "chain", "--n", "3", "--seed", "5")
    assert first == second
    document = json.loads(first)
    assert document["kind"] == types.CHAIN
    assert document["n"] == 3
    schema.validate(document, schema.MODEL_SCHEMA)


def test_gen_model_to_stdout (capsys):
    assert main(["gen-model", "--n", "2"]) == EXIT_SUCCESS
    assert json.loads(capsys.readouterr().out)["alphabet_size"] == 2


def test_eval_point_uniform (tmp_path):
    code, text = _run(tmp_path, "eval-point", "--model", "uniform:n=4", "--sigma", "0110", "--eps", "0.5",
        "--trials", "500", "--seed", "1")
    document = json.loads(text)
    assert code == EXIT_SUCCESS
    assert document["k"] == 64
    assert document["expected_queries"] == pytest.approx(512.0)
    assert document["mean_queries"] == pytest.approx(512.0, rel=0.05)
    assert len(document["estimates"]) == 500
    assert document["truth"] == pytest.approx(1.0 / 16.0)


def test_eval_point_skewed_product (tmp_path):
    code, text = _run(tmp_path, "eval-point", "--model", SKEWED_PRODUCT, "--sigma", "000", "--eps", "0.5",
        "--trials", "500", "--seed", "2")
    document = json.loads(text)
    assert document["expected_queries"] == pytest.approx(720.0)
    assert document["mean_queries"] == pytest.approx(720.0, rel=0.05)
    assert not document["guaranteed"]


def test_eval_point_zero_probability (tmp_path):
    code, text = _run(tmp_path, "eval-point", "--model", "point:n=2,s=11", "--sigma", "10", "--eps", "0.4",
        "--trials", "10")
    document = json.loads(text)
    assert code == EXIT_SUCCESS
    assert document["truth"] == 0.0
    assert document["estimates"] == []
    assert document["success_criterion"] == "not-applicable"


def test_eval_point_rejects_large_accuracy (tmp_path):
    code, text = _run(tmp_path, "eval-point", "--model", "uniform:n=2", "--sigma", "01", "--eps", "1.0")
    assert code == EXIT_CONFIG
    assert text is None


def test_tame_check_point_mass (tmp_path):
    code, text = _run(tmp_path, "tame-check", "--model", "point:n=1,s=0", "--theta", "0.25")
    document = json.loads(text)
    assert code == EXIT_SUCCESS
    assert document["tv"] == pytest.approx(0.25)
    assert document["pass"]


def test_tame_check_uniform_and_random (tmp_path):
    code, text = _run(tmp_path, "tame-check", "--model", "uniform:n=3", "--theta", "0.1")
    assert code == EXIT_SUCCESS
    assert json.loads(text)["tv"] == pytest.approx(0.0, abs=1e-12)
    code, text = _run(tmp_path, "tame-check", "--model", "random:kind=explicit,n=6,seed=3", "--theta", "0.05")
    assert code == EXIT_SUCCESS
    assert json.loads(text)["tv"] <= 0.3


def test_tame_check_from_model_file (tmp_path):
    path = tmp_path / "model.json"
    assert main(["gen-model", "--n", "3", "--alphabet", "3", "--seed", "1", "--out", str(path)]) == EXIT_SUCCESS
    code, text = _run(tmp_path, "tame-check", "--model", str(path), "--theta", "0.1", "--mode", "hypergrid")
    assert code == EXIT_SUCCESS
    assert json.loads(text)["mode"] == types.HYPERGRID


def test_test_single_run_is_byte_identical (tmp_path):
    argv = ["test", "--p-model", "uniform:n=2", "--q-model", "uniform:n=2", "--eps1", "0.2", "--eps2", "0.8",
        "--trials", "1", "--seed", "7"] + FAST_SCALES
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert main(argv + ["--out", str(first)]) in (EXIT_SUCCESS, EXIT_REJECT)
    assert main(argv + ["--workers", "2", "--out", str(second)]) in (EXIT_SUCCESS, EXIT_REJECT)
    assert first.read_bytes() == second.read_bytes()


def test_test_output_fields (tmp_path):
    code, text = _run(tmp_path, "test", "--p-model", "uniform:n=2", "--q-model", "uniform:n=2", "--eps1", "0.2",
        "--eps2", "0.8", "--trials", "3", "--seed", "1", *FAST_SCALES)
    document = json.loads(text)
    schema.validate_test_output(document)
    assert document["aggregate"]["trials"] == 3
    assert document["aggregate"]["params"]["profile"] == types.ENGINEERING_PROFILE
    assert document["scenario"]["p_model"] == "uniform:n=2"
    assert code == EXIT_SUCCESS


def test_test_single_rejecting_run (tmp_path):
    code, text = _run(tmp_path, "test", "--p-model", "uniform:n=2", "--q-model", "point:n=2,s=00", "--eps1", "0.1",
        "--eps2", "0.6", "--trials", "1", "--seed", "3")
    assert json.loads(text)["runs"][0]["verdict"] == types.REJECT
    assert code == EXIT_REJECT


def test_test_config_file_with_overrides (tmp_path):
    config = tmp_path / "scenario.json"
    config.write_text(json.dumps({"p_model": "uniform:n=2", "q_model": "uniform:n=2", "eps1": 0.2, "eps2": 0.8,
        "trials": 2, "m_scale": 0.02, "t_scale": 0.01, "k_scale": 0.005}))
    code, text = _run(tmp_path, "test", "--config", str(config), "--trials", "1", "--seed", "4")
    document = json.loads(text)
    assert document["aggregate"]["trials"] == 1
    assert document["scenario"]["seed"] == 4
    assert code in (EXIT_SUCCESS, EXIT_REJECT)


def test_test_configuration_errors (tmp_path):
    assert main(["test", "--p-model", "uniform:n=2", "--q-model", "uniform:n=2", "--eps1", "0.2"]) == EXIT_CONFIG
    assert main(["test", "--p-model", "uniform:n=2", "--q-model", "uniform:n=3", "--eps1", "0.2",
        "--eps2", "0.8"]) == EXIT_CONFIG
    assert main(["test", "--config", str(tmp_path / "missing.json")]) == EXIT_CONFIG
    config = tmp_path / "scenario.json"
    config.write_text(json.dumps({"p_model": "uniform:n=2", "colour": "blue"}))
    assert main(["test", "--config", str(config)]) == EXIT_CONFIG


def test_scenario_config ():
    scenario = ScenarioConfig(p_model="uniform:n=2", q_model="uniform:n=2", eps1=0.3, eps2=0.2)
    with pytest.raises(ConfigError):
        scenario.validate()
    scenario.override(eps1=0.1, eps2=None)
    scenario.validate()
    assert scenario.eps2 == 0.2
    assert "out" not in scenario.export()
    assert scenario.tester_config().profile == types.ENGINEERING_PROFILE


def test_bench_csv (tmp_path):
    code, text = _run(tmp_path, "bench", "--ns", "2,3", "--runs", "1", *FAST_SCALES)
    lines = text.strip().split("\n")
    assert code == EXIT_SUCCESS
    assert lines[0] == "n,gamma,mean_queries,M"
    assert len(lines) == 3


def test_verify_named_check (tmp_path):
    code, text = _run(tmp_path, "verify", "--checks", "taming-tv-bound")
    scorecard = json.loads(text)
    schema.validate_scorecard(scorecard)
    assert code == EXIT_SUCCESS
    assert scorecard["passed"]


def test_unknown_subcommand_exits_with_usage ():
    with pytest.raises(SystemExit) as error:
        main(["compare"])
    assert error.value.code == 2


def test_schema_rejects_wrong_types ():
    with pytest.raises(ConfigError):
        schema.validate({"kind": "explicit", "n": "2", "alphabet_size": 2, "payload": []}, schema.MODEL_SCHEMA)
    with pytest.raises(ConfigError):
        schema.validate({"tv": 0.1}, schema.TAME_CHECK_SCHEMA)
    document = helper.serialize({"kind": "product", "n": 1, "alphabet_size": 2, "payload": [[0.5, 0.5]]})
    assert schema.validate(document, schema.MODEL_SCHEMA) is document


@pytest.mark.slow
def test_test_accepts_equal_uniform (tmp_path):
    code, text = _run(tmp_path, "test", "--p-model", "uniform:n=3", "--q-model", "uniform:n=3", "--eps1", "0.2",
        "--eps2", "0.8", "--trials", "20", "--seed", "0", "--workers", "2")
    assert code == EXIT_SUCCESS
    assert json.loads(text)["aggregate"]["accept_rate"] >= 0.6


def test_run_failure_has_its_own_exit_code (monkeypatch, capsys):
    def stalled (*args, **kwargs):
        raise NonterminationSuspected("no success for symbol 1 after 1000 draws")
    monkeypatch.setattr(commands, "cmd_tame_check", stalled)
    code = main(["--verbosity", "none", "tame-check", "--model", "uniform:n=2", "--theta", "0.1"])
    assert code == EXIT_FAILURE
    assert "no success for symbol 1" in capsys.readouterr().err


def test_usage_error_is_reported_when_silent (capsys):
    code = main(["--verbosity", "none", "eval-point", "--model", "uniform:n=2", "--sigma", "012", "--eps", "0.4"])
    assert code == EXIT_CONFIG
    assert "eval-point" in capsys.readouterr().err
