"""
Test configuration defaults and overrides
"""

import logging
import sys
import os

import pytest
from loguru import logger

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from config.settings import get_config, load_config
from utils import configure_logging, ordered_map, set_thread_cap
from utils.logging_setup import InterceptHandler
from utils.errors import ConfigurationError


def test_defaults():
    config = get_config()
    assert set(config) == {"solver", "properties", "harness", "parallel", "logging", "output"}
    assert config["harness"]["default_trials"] == 200
    assert config["properties"]["w0_eps_grid"][0] == "1"


def test_yaml_override(tmp_path):
    path = tmp_path / "override.yaml"
    path.write_text("harness:\n  default_trials: 5\nsolver:\n  newton_tol: 1.0e-8\n")
    config = load_config(str(path))
    assert config["harness"]["default_trials"] == 5
    assert config["harness"]["grid_bound"] == 12
    assert config["solver"]["newton_tol"] == 1e-8


def test_bad_overrides(tmp_path):
    with pytest.raises(ConfigurationError):
        load_config(str(tmp_path / "missing.yaml"))
    path = tmp_path / "bad.yaml"
    path.write_text("plugins:\n  x: 1\n")
    with pytest.raises(ConfigurationError):
        load_config(str(path))
    path.write_text("lp:\n  max_pivots: 10\n")
    with pytest.raises(ConfigurationError, match="lp"):
        load_config(str(path))


def test_ordered_map_keeps_order():
    configure_logging(get_config())
    set_thread_cap(4)
    try:
        assert ordered_map(lambda v: v * v, range(20)) == [v * v for v in range(20)]
    finally:
        set_thread_cap(None)


def test_stdlib_logging_is_routed_to_loguru():
    configure_logging(get_config(), "INFO")
    messages = []
    sink_id = logger.add(messages.append, level="INFO", format="{level} {message}")
    try:
        logging.getLogger("ehlcp.external").warning("routed through loguru")
    finally:
        logger.remove(sink_id)
        root = logging.getLogger()
        for handler in [h for h in root.handlers if isinstance(h, InterceptHandler)]:
            root.removeHandler(handler)
    assert any("WARNING routed through loguru" in m for m in messages)
