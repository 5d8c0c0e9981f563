# -*- coding: utf-8 -*-
import os
from unittest.mock import patch

import pytest

from chaospu import get_setting, load_configuration_file
from chaospu.exceptions import InvalidInput


@patch('chaospu.has_local_config_file', autospec=True)
def test_configuration_wins_over_environment(has_conf):
    has_conf.return_value = False
    with patch.dict(os.environ, {"CHAOSPU_MAX_DEGREE": "5"}):
        assert get_setting("max_degree", {"max_degree": 3}) == 3
        assert get_setting("max_degree") == "5"


@patch('chaospu.has_local_config_file', autospec=True)
def test_default_when_nothing_is_set(has_conf):
    has_conf.return_value = False
    with patch.dict(os.environ, {}, clear=True):
        assert get_setting("oracle_max_n", None, 6) == 6


@patch('chaospu.has_local_config_file', autospec=True)
def test_settings_from_the_local_file(has_conf):
    has_conf.return_value = True
    with patch.dict(os.environ, {
            "CHAOSPU_CONFIG": "./tests/fixtures/settings.yaml"}, clear=True):
        assert get_setting("max_degree") == 7
        assert get_setting("format", None, "text") == "json"
        assert get_setting("jobs", None, 1) == 1


def test_cannot_process_other_than_yaml_and_json():
    path = "./tests/fixtures/invalid-config.txt"
    with pytest.raises(InvalidInput) as excinfo:
        load_configuration_file(path)
    assert "must be YAML or JSON" in str(excinfo)


def test_configuration_must_be_a_mapping():
    with pytest.raises(InvalidInput) as excinfo:
        load_configuration_file("./tests/fixtures/not-a-mapping.yaml")
    assert "must hold a mapping" in str(excinfo)


def test_missing_configuration_file():
    with pytest.raises(InvalidInput) as excinfo:
        load_configuration_file("./tests/fixtures/missing.json")
    assert "failed to read configuration file" in str(excinfo)
