"""
Constructions subpackage for pseudoseg_census.
"""

from .grid import Choice, GridIncidence, DetourChoice, CensusResult
from .grid import build_grid
from .grid import combinatorial_graph
from .grid import realize_geometric
from .grid import grid_census
from .staircase import StaircaseParams
from .staircase import staircase_build
from .staircase import staircase_graph
from .staircase import staircase_census
from .grounded import random_grounded_family
