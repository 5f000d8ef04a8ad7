"""
Default configuration settings for the pseudoseg_census package.
This module defines the default budgets, limits and experiment parameters.
"""

import copy

import yaml


DEFAULT_CONFIG = {
    'general': {
        'log_level': 'WARNING',
        'log_format': 'json',  # 'json' or 'text'
    },
    'grid': {
        'scale': None,  # None means 1/(2k)
        'census_limit': 10**6,
        'verify_geometry': False,
        'random_trials': 100,
    },
    'staircase': {
        'census_limit': 10**4,
    },
    'setsystem': {
        'work_budget': 10**8,  # elementary trace operations
        'header_bits': 64,
        'pack_z_max': 6,
    },
    'arrangement': {
        'max_allowable_m': 5,
        'cutting_sample_factor': 6,
        'cutting_retry_limit': 100,
        'zone_constant': 12,
        'random_swap_fraction': 0.5,
    },
    'census': {
        'max_grounded_m': 4,
        'max_eq1_n': 3,
        'max_eq1_m': 4,
        'max_trace_z': 6,
    },
    'cli': {
        'format': 'json',  # 'json' or 'csv' where both apply
        'jobs': 1,
    },
    'formatting': {
        'log2': {'decimal_places': 6},
        'ratio': {'decimal_places': 6},
        'counts': {'show_commas': False},
    },
    'bound_table': {
        'grid': [{'n': 8, 'k': 2}, {'n': 27, 'k': 3}, {'n': 64, 'k': 4}],
        'staircase': [{'k': 2, 'h': 2}, {'k': 3, 'h': 2}],
        'double_grounded': [{'m': 2}, {'m': 3}],
    },
}


def merge_config(base, overrides):
    """
    Merge configuration overrides into a copy of a base configuration.

    Args:
        base (dict): Configuration to start from.
        overrides (dict, optional): Section-wise overrides. A dict section is
            updated key by key, anything else replaces the section.

    Returns:
        dict: The merged configuration (a deep copy; inputs are untouched).
    """
    merged = copy.deepcopy(base)
    if not overrides:
        return merged

    for section, values in overrides.items():
        if isinstance(values, dict) and isinstance(merged.get(section), dict):
            merged[section].update(copy.deepcopy(values))
        else:
            merged[section] = copy.deepcopy(values)
    return merged


def load_config(path, base=None):
    """
    Load a YAML configuration file and merge it over the defaults.

    Args:
        path (str): Path to a YAML mapping of config sections.
        base (dict, optional): Configuration to merge over. Default is DEFAULT_CONFIG.

    Returns:
        dict: The merged configuration.
    """
    with open(path, encoding='utf-8') as handle:
        overrides = yaml.safe_load(handle) or {}

    if not isinstance(overrides, dict):
        raise ValueError(f"Config file {path} must contain a mapping")

    return merge_config(base if base is not None else DEFAULT_CONFIG, overrides)


def get_setting(config, section, key):
    """
    Read one setting, falling back to DEFAULT_CONFIG.

    Args:
        config (dict, optional): Configuration in use.
        section (str): Section name.
        key (str): Setting name.

    Returns:
        The configured value.
    """
    if config and key in config.get(section, {}):
        return config[section][key]
    return DEFAULT_CONFIG[section][key]
