# Configuration settings for the EHLCP toolkit

import copy
import json
import os
from typing import Dict, Any, Optional

import yaml
from dotenv import load_dotenv

load_dotenv()

# Solver Configuration
SOLVER_CONFIG = {
    "newton_tol": float(os.getenv("EHLCP_NEWTON_TOL", "1e-10")),
    "newton_max_iter": int(os.getenv("EHLCP_NEWTON_MAX_ITER", "100")),
    "armijo_sigma": 1e-4,
    "min_step": 1e-12,
    "rationalize_denominator": 10**6,
    "degree_retry_limit": int(os.getenv("EHLCP_DEGREE_RETRIES", "16")),
    "degree_target_denominator": 997,
}

# Tuple property checkers
PROPERTY_CONFIG = {
    "w0_eps_grid": ["1", "1/10", "1/100", "1/1000"],
    "diag_probe_trials": 200,
}

# Randomized theorem harness
HARNESS_CONFIG = {
    "default_seed": int(os.getenv("EHLCP_SEED", "1")),
    "default_trials": 200,
    "default_sizes": [[1, 1], [2, 1], [2, 2], [3, 1], [3, 2]],
    "entry_range": [-3, 3],
    "half_probability": 0.15,
    "resample_budget": 200,
    "samples_per_tuple": 5,
    "grid_bound": 12,
    "probe_trials": 50,
    "z_samples": 3,
}

# Parallelism (EHLCP_THREADS caps worker threads)
PARALLEL_CONFIG = {
    "threads": max(1, int(os.getenv("EHLCP_THREADS", "1"))),
}

# Logging Configuration
LOGGING_CONFIG = {
    "level": os.getenv("EHLCP_LOG_LEVEL", "WARNING"),
    "format": "{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function}:{line} | {message}",
    "file": os.getenv("EHLCP_LOG_FILE", ""),
    "rotation": "1 week",
    "retention": "1 month"
}

# Report output
OUTPUT_CONFIG = {
    "format": "text",
    "export_folder": "exports",
}


def get_config() -> Dict[str, Any]:
    """Get complete configuration dictionary"""
    return copy.deepcopy({
        "solver": SOLVER_CONFIG,
        "properties": PROPERTY_CONFIG,
        "harness": HARNESS_CONFIG,
        "parallel": PARALLEL_CONFIG,
        "logging": LOGGING_CONFIG,
        "output": OUTPUT_CONFIG,
    })


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
    return base


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration, merging a YAML or JSON override file over the defaults

    Args:
        config_path: Override file; falls back to the EHLCP_CONFIG environment variable

    Returns:
        Complete configuration dictionary
    """
    from utils.errors import ConfigurationError

    config = get_config()
    config_path = config_path or os.getenv("EHLCP_CONFIG")
    if not config_path:
        return config

    if not os.path.exists(config_path):
        raise ConfigurationError(f"Configuration file not found: {config_path}")

    with open(config_path, 'r') as f:
        if config_path.endswith('.json'):
            overrides = json.load(f)
        else:
            overrides = yaml.safe_load(f) or {}

    if not isinstance(overrides, dict):
        raise ConfigurationError(f"Configuration file must hold a mapping: {config_path}")

    unknown = sorted(set(overrides) - set(config))
    if unknown:
        raise ConfigurationError(f"Unknown configuration sections: {', '.join(unknown)}")

    return _deep_merge(config, overrides)
