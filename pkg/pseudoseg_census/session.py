"""
Main session class for the pseudoseg_census package.
This module provides the CensusSession class, which holds one configuration
and runs named experiments against it.
"""

import json
import logging

import pandas as pd

from .census.equation import h_relation_counts
from .census.grounded import enumerate_double_grounded
from .census.tables import bound_table
from .census.traces import trace_trials
from .config import DEFAULT_CONFIG, merge_config
from .constructions.grid import build_grid, grid_census
from .constructions.staircase import staircase_census
from .exceptions import BadParams


logger = logging.getLogger(__name__)


class CensusSession:
    """
    Configuration holder and experiment dispatcher.
    """

    def __init__(self, config=None):
        """
        Initialize a new session.

        Args:
            config (dict, optional): Custom configuration to override defaults.
        """
        self.config = merge_config(DEFAULT_CONFIG, config)
        self.results = []

    @property
    def jobs(self):
        return self.config['cli']['jobs']

    def run(self, experiment, **params):
        """
        Run a named experiment and record its result.

        Args:
            experiment (str): One of 'grid', 'staircase', 'grounded',
                'trace-check', 'verify-eq1', 'bound-table'.
            **params: Experiment parameters.

        Returns:
            The experiment's result object.
        """
        experiments = {
            "grid": self.grid_census,
            "staircase": self.staircase_census,
            "grounded": self.grounded_census,
            "trace-check": self.trace_check,
            "verify-eq1": self.verify_eq1,
            "bound-table": self.bound_table,
        }

        if experiment not in experiments:
            raise BadParams(f"Unsupported experiment: {experiment}")

        result = experiments[experiment](**params)
        self.results.append((experiment, result))
        return result

    def grid_census(self, n, k, limit=None, verify_geometry=None):
        return grid_census(
            build_grid(n, k),
            limit=limit,
            verify_geometry=verify_geometry,
            jobs=self.jobs,
            config=self.config,
        )

    def staircase_census(self, k, h, limit=None):
        return staircase_census(k, h, limit=limit, jobs=self.jobs, config=self.config)

    def grounded_census(self, m):
        return enumerate_double_grounded(m, config=self.config)

    def trace_check(self, trials, z, seed, max_a=15, max_b=10, dual=False):
        return trace_trials(
            trials, z, seed, max_a=max_a, max_b=max_b, dual=dual, jobs=self.jobs, config=self.config
        )

    def verify_eq1(self, pairs, ns=(1, 2, 3), ms=(1, 2, 3, 4)):
        """
        Both sides of the multiset identity over a parameter grid.

        Args:
            pairs (iterable): (c, d) pairs.
            ns (iterable): Ground sizes.
            ms (iterable): Multiset sizes.

        Returns:
            list: HRelation per (c, d, n, m), in that nesting order.
        """
        relations = []
        for c, d in pairs:
            for n in ns:
                for m in ms:
                    relations.append(h_relation_counts(n, m, c, d, config=self.config))
        return relations

    def bound_table(self, experiments=None):
        return bound_table(experiments, jobs=self.jobs, config=self.config)

    def summary(self):
        """
        JSON-ready records of the results so far.

        Returns:
            list: {'experiment', 'result'} dicts.
        """
        records = []
        for experiment, result in self.results:
            records.append({'experiment': experiment, 'result': _as_record(result)})
        return records

    def save(self, path):
        """
        Save the session summary as JSON.

        Args:
            path (str): Path to save the summary.
        """
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(self.summary(), handle, indent=2)
        logger.info("session saved", extra={'path': path, 'results': len(self.results)})


def _as_record(result):
    if isinstance(result, pd.DataFrame):
        return result.to_dict(orient="records")
    if isinstance(result, (list, tuple)):
        return [_as_record(item) for item in result]
    if hasattr(result, "to_dict"):
        return result.to_dict()
    return result
