# -*- coding: utf-8 -*-
import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from chaospu import __version__
from chaospu.cli import cli


@pytest.fixture
def run():
    runner = CliRunner()
    with patch('chaospu.has_local_config_file', autospec=True) as has_conf:
        has_conf.return_value = False
        yield lambda *args: runner.invoke(cli, [str(a) for a in args])


def test_version(run):
    result = run("--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_theta_on_a_single_generator(run):
    result = run("theta", 8, 3)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "56*w^2"


def test_theta_with_closed_form(run):
    result = run("theta", 8, "1,8")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "-4*r15 - 2*w^4*r7 - w^6*r3"
    assert lines[1].startswith("closed: ")
    assert lines[2] == "agrees: true"


def test_theta_as_json(run):
    result = run("theta", 2, "1,2", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["index"] == "1,2"
    assert payload["value"] == [{"coeff": "-1", "omega": 0, "rho": [2]}]


@pytest.mark.parametrize("args", [
    ("present", 1),
    ("theta", 8, 0),
    ("theta", 8, 9),
    ("groups", 2, "--max-degree", 6),
    ("groups", 2, "--jobs", 0),
    ("primary", 6, "--prime", 5),
    ("verify", 3, "--window", "4,2"),
])
def test_invalid_input_exits_with_two(run, args):
    assert run(*args).exit_code == 2


def test_groups_of_pu2(run):
    result = run("groups", 2)
    assert result.exit_code == 0
    assert result.output == "0: Z\n1: 0\n2: Z/2\n3: Z\n4: 0\n5: 0\n"


def test_groups_as_json(run):
    result = run("groups", 3, "--max-degree", 5, "--format", "json")
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert rows[5] == {"degree": 5, "free_rank": 1, "torsion": ["3"]}


def test_present_as_json(run):
    result = run("present", 2, "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["n"] == 2
    assert payload["generators"] == [{"name": "w", "deg": 2},
                                     {"name": "r3", "deg": 3}]


def test_present_pu8_as_latex(run):
    result = run("present", 8, "--format", "latex")
    assert result.exit_code == 0
    assert r"$\{2,4\}$ & $2\omega^{2}\otimes \rho_{7}$ \\ \hline" in \
        result.output.splitlines()


def test_present_pu8_keeps_fifteen_relations(run):
    result = run("present", 8)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    start = lines.index("relations:") + 1
    end = lines.index("primary p=2 r=3:")
    assert len(lines[start:end]) == 15
    assert "  order r=8: w^8" in lines[start:end]


def test_primary_of_twelve(run):
    result = run("primary", 12, "--max-degree", 10)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert "p=2 r=2" in lines
    assert "p=3 r=1" in lines
    assert lines[-1] == "decomposition matches: true"


def test_verify_refuses_large_n(run):
    assert run("verify", 7).exit_code == 3
    assert run("verify", 3, "--oracle-max-n", 2).exit_code == 3


def test_verify_pu2(run):
    result = run("verify", 2)
    assert result.exit_code == 0
    assert "groups: ok" in result.output.splitlines()
    assert "connecting_map: ok" in result.output.splitlines()


def test_verify_in_a_window(run):
    result = run("verify", 3, "--window", "0,5", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert sorted(payload["checks"]) == ["coinvariant_rank", "groups"]


def test_sanity(run):
    result = run("sanity", 3)
    assert result.exit_code == 0
    assert "top_degree_is_Z: ok" in result.output.splitlines()


def test_properties(run):
    result = run("properties", 4, "--seed", 3, "--trials", 2)
    assert result.exit_code == 0
    assert "product_rule: ok" in result.output.splitlines()


def test_arith_table(run):
    result = run("arith", 8)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[1] == "1\t8\t8\t-"
    assert lines[2] == "2\t28\t4\t2"
    assert lines[4] == "4\t70\t2\t2"
    assert "factorization: ok" in lines


@patch('chaospu.cli.sanity_suite', autospec=True)
def test_failed_check_exits_with_one(suite, run):
    suite.return_value = {"top_degree_is_Z": False}
    result = run("sanity", 2)
    assert result.exit_code == 1
    assert "top_degree_is_Z: FAILED fails" in result.output.splitlines()
