"""Configuration resolution and the command-line surface."""

import math
import subprocess
import sys

import pytest

from switchsim.cli import main
from switchsim.config import ConfigError, RunConfig, config_from_values, load_config, parse_config_file

TABLE_DEFAULTS = {
    "p_rn": 30.0,
    "p_i": 20.0,
    "sigma_z2": -55.0,
    "alpha": 3.0,
    "beta": 0.0,
    "t1": 50.0,
    "t2": 10.0,
    "R": 50.0,
    "a1": 1.299e-7,
    "a2": 5.299e-7,
    "varpi": 1.0,
    "t_s": 200.0,
    "g_max": 8,
    "tau": 8.0,
}


def test_defaults_match_reference_table():
    values = RunConfig().values()
    for key, expect in TABLE_DEFAULTS.items():
        assert values[key] == expect, key
    assert values["phi"] == pytest.approx(math.pi / 3)
    assert values["lambda_rn"] == 0.2
    assert values["epsilon"] == 3.0


def test_config_file_and_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# comment line\nlambda_rn = 0.1\nphi=1.0472  # sector angle\n\ntrials = 5\n")
    parsed = parse_config_file(path)
    assert parsed == {"lambda_rn": "0.1", "phi": "1.0472", "trials": "5"}
    config = load_config(path)
    assert config.deployment.lambda_rn == 0.1
    assert config.trials == 5
    # overrides beat the file
    config = load_config(path, overrides={"lambda_rn": 0.3})
    assert config.deployment.lambda_rn == 0.3
    assert config.deployment.phi == pytest.approx(1.0472)


def test_unknown_key_is_named(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("lambda_pn = 0.1\n")
    with pytest.raises(ConfigError, match="lambda_pn"):
        load_config(path)
    with pytest.raises(ConfigError, match="nope"):
        load_config(overrides={"nope": 1})


def test_range_violations_are_named():
    with pytest.raises(ConfigError, match="alpha"):
        config_from_values({"alpha": 2})
    with pytest.raises(ConfigError, match="delta"):
        config_from_values({"delta": 1.5})
    with pytest.raises(ConfigError, match="'k'"):
        config_from_values({"n": 4, "k": 4})
    with pytest.raises(ConfigError, match="phi"):
        config_from_values({"phi": 4.0})


def test_replace_round_trip():
    config = RunConfig()
    bumped = config.replace(lambda_rn=0.3, lambda_i=0.3 / 8000)
    assert bumped.deployment.lambda_rn == 0.3
    assert bumped.channel.lambda_i == pytest.approx(3.75e-5)
    assert bumped.channel.epsilon == config.channel.epsilon


# --- CLI ---------------------------------------------------------------------


def run_cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "switchsim.cli", *args],
        cwd=cwd,
        capture_output=True,
        text=True,
    )


def test_cli_topology(tmp_path):
    out = tmp_path / "topo.csv"
    rc = main(["topology", "--out", str(out), "--lambda_rn", "0.01"])
    assert rc == 0
    assert out.exists()
    edges = tmp_path / "topo_edges.csv"
    assert edges.exists()
    header = out.read_text().splitlines()[0]
    assert header == "kind,label,x,y,sector"


def test_cli_analytic_sweep(tmp_path):
    out = tmp_path / "sweep.csv"
    rc = main(["analytic", "--param", "phi", "--values", "0.5236,1.0472,1.5708", "--out", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1 + 6  # header + two schemes per value
    assert lines[0].startswith("scheme,lambda_rn,phi")


def test_cli_simulate_deterministic(tmp_path):
    args = [
        "simulate",
        "--param",
        "lambda_rn",
        "--values",
        "0.05",
        "--trials",
        "3",
        "--seed",
        "9",
    ]
    a = run_cli(args + ["--out", "a.csv"], tmp_path)
    b = run_cli(args + ["--out", "b.csv"], tmp_path)
    assert a.returncode == 0 and b.returncode == 0, a.stderr + b.stderr
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_cli_figure_flag_override(tmp_path):
    out = tmp_path / "fig6.csv"
    rc = main(["figure", "fig6", "--out", str(out), "--phi", "1.0472"])
    assert rc == 0
    header = out.read_text().splitlines()[0].split(",")
    assert header[0] == "epsilon"
    assert len(header) == 4


def test_cli_error_paths(tmp_path):
    rc = main(["analytic", "--param", "bogus", "--values", "1", "--out", str(tmp_path / "x.csv")])
    assert rc == 2
    rc = main(["simulate", "--param", "lambda_rn", "--values", "", "--out", str(tmp_path / "y.csv")])
    assert rc == 2
    proc = run_cli(["figure", "fig99"], tmp_path)
    assert proc.returncode == 2
    proc = run_cli(["analytic", "--param", "lambda_rn", "--values", "0.1", "--alpha", "2"], tmp_path)
    assert proc.returncode == 2
    assert "alpha" in proc.stderr
