# -*- coding: utf-8 -*-
import json
import os
import os.path
from typing import Any, Dict, List

import yaml
from chaoslib.discovery.discover import discover_actions, discover_probes, \
    initialize_discovery_result
from chaoslib.types import Configuration, DiscoveredActivities, Discovery
from logzero import logger

from chaospu.exceptions import InvalidInput

__all__ = ["discover", "get_setting", "load_configuration_file",
           "__version__"]
__version__ = '0.1.0'

ENV_PREFIX = "CHAOSPU_"
DEFAULT_CONFIG_PATH = "~/.chaospu.yaml"


def has_local_config_file() -> bool:
    config_path = os.path.expanduser(
        os.environ.get('CHAOSPU_CONFIG', DEFAULT_CONFIG_PATH))
    return os.path.exists(config_path)


def load_configuration_file(path: str) -> Dict[str, Any]:
    """
    Load settings from a YAML or JSON file. The extension decides the
    format: `.yaml`/`.yml` or `.json`.
    """
    path = os.path.expanduser(path)
    _, ext = os.path.splitext(path)
    ext = ext.lower()
    if ext not in (".yaml", ".yml", ".json"):
        raise InvalidInput(
            "configuration file '{p}' must be YAML or JSON".format(p=path))

    try:
        with open(path) as f:
            if ext == ".json":
                settings = json.load(f)
            else:
                settings = yaml.safe_load(f)
    except (OSError, ValueError, yaml.YAMLError) as x:
        raise InvalidInput(
            "failed to read configuration file '{p}': {x}".format(
                p=path, x=str(x)))

    if settings is None:
        settings = {}
    if not isinstance(settings, dict):
        raise InvalidInput(
            "configuration file '{p}' must hold a mapping".format(p=path))

    logger.debug("Loaded {c} settings from '{p}'".format(
        c=len(settings), p=path))
    return settings


def get_setting(key: str, configuration: Configuration = None,
                default: Any = None) -> Any:
    """
    Look a setting up, in order, from:

    1. the `configuration` mapping (as handed over by the Chaos Toolkit or
       built from command-line flags)
    2. the environment, under the key uppercased and prefixed with
       `CHAOSPU_`, so `max_degree` becomes `CHAOSPU_MAX_DEGREE`
    3. the local configuration file, `~/.chaospu.yaml` by default or the
       path set in `CHAOSPU_CONFIG`
    4. the given default
    """
    env = os.environ
    configuration = configuration or {}

    def lookup(k: str, d: Any = None) -> Any:
        env_key = "{p}{k}".format(p=ENV_PREFIX, k=k.upper().replace("-", "_"))
        return configuration.get(k, env.get(env_key, d))

    value = lookup(key)
    if value is None and has_local_config_file():
        settings = load_configuration_file(
            env.get('CHAOSPU_CONFIG', DEFAULT_CONFIG_PATH))
        value = settings.get(key)

    if value is None:
        return default
    return value


def discover(discover_system: bool = True) -> Discovery:
    """
    Discover the cohomology capabilities offered by this extension.
    """
    logger.info("Discovering capabilities from chaostoolkit-pu-cohomology")

    discovery = initialize_discovery_result(
        "chaostoolkit-pu-cohomology", __version__, "cohomology")
    discovery["activities"].extend(load_exported_activities())
    return discovery


###############################################################################
# Private functions
###############################################################################
def load_exported_activities() -> List[DiscoveredActivities]:
    """
    Extract metadata from actions and probes exposed by this extension.
    """
    activities = []
    activities.extend(discover_probes("chaospu.probes"))
    activities.extend(discover_actions("chaospu.actions"))
    activities.extend(discover_probes("chaospu.presentation.probes"))
    activities.extend(discover_probes("chaospu.koszul.probes"))
    return activities
