"""
Bound table: census sizes of the constructions next to the exponent they are
measured against.
"""

import logging
import math

import pandas as pd

from ..config import DEFAULT_CONFIG, merge_config
from ..constructions.grid import build_grid, grid_census
from ..constructions.staircase import staircase_census
from ..exceptions import BadParams
from ..utils.formatting import format_value
from .grounded import enumerate_double_grounded


logger = logging.getLogger(__name__)

BOUND_TABLE_COLUMNS = ['family', 'n', 'k', 'log2_count', 'exponent_model', 'fitted_constant']

EXPONENT_MODELS = {
    'grid': ('k*n', lambda n, k: k * n),
    'staircase': ('n*log2(n)', lambda n, k: n * math.log2(n)),
    'double_grounded': ('n*log2(n)^2', lambda n, k: n * math.log2(n) ** 2),
}


def _row(family, n, k, log2_count):
    model, exponent = EXPONENT_MODELS[family]
    scale = exponent(n, k)
    fitted = log2_count / scale if scale > 0 else None
    return {
        'family': family,
        'n': n,
        'k': k,
        'log2_count': log2_count,
        'exponent_model': model,
        'fitted_constant': fitted,
    }


def _grid_rows(entries, jobs, config):
    for entry in entries:
        grid = build_grid(entry['n'], entry['k'])
        result = grid_census(grid, jobs=jobs, config=config)
        yield _row('grid', grid.n, grid.k, grid.total_incidences)
        logger.info("grid row", extra={'n': grid.n, 'k': grid.k, 'verified': result.verified})


def _staircase_rows(entries, jobs, config):
    for entry in entries:
        k, h = entry['k'], entry['h']
        result = staircase_census(k, h, jobs=jobs, config=config)
        yield _row('staircase', 3 * k + h, k, 3 * h * math.log2(k))
        logger.info("staircase row", extra={'k': k, 'h': h, 'verified': result.verified})


def _double_grounded_rows(entries, jobs, config):
    for entry in entries:
        census = enumerate_double_grounded(entry['m'], config=config)
        yield _row('double_grounded', census.m, None, math.log2(census.graph_count))


ROW_BUILDERS = {
    'grid': _grid_rows,
    'staircase': _staircase_rows,
    'double_grounded': _double_grounded_rows,
}


def bound_table(experiments=None, jobs=1, config=None):
    """
    Run the configured censuses and collect one row per experiment.

    Args:
        experiments (dict, optional): Lists of parameter dicts keyed by
            'grid' ({n, k}), 'staircase' ({k, h}) and 'double_grounded' ({m}).
            Defaults to the 'bound_table' config section; an empty dict gives
            an empty table.
        jobs (int): Worker processes for the censuses.
        config (dict, optional): Configuration supplying defaults.

    Returns:
        pandas.DataFrame: Columns family, n, k, log2_count, exponent_model,
        fitted_constant.
    """
    if experiments is None:
        experiments = merge_config(DEFAULT_CONFIG, config)['bound_table']

    unknown = set(experiments) - set(ROW_BUILDERS)
    if unknown:
        raise BadParams(f"Unsupported experiment families: {sorted(unknown)}")

    rows = []
    for family, builder in ROW_BUILDERS.items():
        rows.extend(builder(experiments.get(family) or [], jobs, config))
    return pd.DataFrame(rows, columns=BOUND_TABLE_COLUMNS)


def format_bound_table(table, config=None):
    """
    Render numeric cells of a bound table as strings for CSV output.
    """
    settings = merge_config(DEFAULT_CONFIG, config)
    formatted = table.astype(object).copy()
    formatted['n'] = [format_value(value, 'counts', settings) for value in table['n']]
    formatted['k'] = [format_value(value, 'counts', settings) for value in table['k']]
    formatted['log2_count'] = [format_value(value, 'log2', settings) for value in table['log2_count']]
    formatted['fitted_constant'] = [
        format_value(value, 'ratio', settings) for value in table['fitted_constant']
    ]
    return formatted
