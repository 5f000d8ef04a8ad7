"""
pseudoseg_census - Constructions, codecs and censuses for intersection graphs of x-monotone pseudo-segments.

This module exposes the exact-rational curve kernel, the grid and staircase
constructions, set-system shatter tools with the delta codec, arrangement
sweeps and decompositions, and the small-scale census experiments.
"""

__version__ = '0.1.0'

from .config import DEFAULT_CONFIG
from .session import CensusSession
