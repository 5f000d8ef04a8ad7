"""
Shared fixtures for the pseudoseg_census test suite.
"""

import logging

import pytest

from pseudoseg_census.config import DEFAULT_CONFIG, merge_config
from pseudoseg_census.geometry.curves import CurveFamily, MonotoneCurve


def segment(label, x0, y0, x1, y1):
    return MonotoneCurve.segment(label, (x0, y0), (x1, y1))


@pytest.fixture
def crossing_pair():
    """Two grounded segments on [0, 1] that cross once at (1/2, 1/2)."""
    return CurveFamily(
        (segment('a', 0, 0, 1, 1), segment('b', 0, 1, 1, 0)),
        strip=(0, 1),
    )


@pytest.fixture
def full_reversal():
    """Three grounded segments on [0, 1] crossing pairwise at distinct x."""
    return CurveFamily(
        (
            segment('1', 0, 0, 1, 6),
            segment('2', 0, 2, 1, 3),
            segment('3', 0, 5, 1, 0),
        ),
        strip=(0, 1),
    )


@pytest.fixture
def horizontal_throughs():
    """Five disjoint horizontal through-curves at heights 1..5 on [0, 10]."""
    return CurveFamily(
        tuple(segment(f"w{i}", 0, i, 10, i) for i in range(1, 6)),
        strip=(0, 10),
    )


@pytest.fixture
def small_config():
    return merge_config(DEFAULT_CONFIG, {'setsystem': {'work_budget': 10**6}})


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger('pseudoseg_census')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True
