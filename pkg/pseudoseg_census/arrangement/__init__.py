"""
Arrangement subpackage for pseudoseg_census: sweeps, faces, zones, decompositions and cuttings.
"""

from .wiring import Swap, WiringDiagram, SweepEvent
from .wiring import sweep
from .wiring import x_iso_canonical
from .wiring import enumerate_full_allowable
from .wiring import random_wiring_diagram
from .faces import Face, faces, zone_complexity, zone_complexities
from .decomposition import Cell, VerticalDecomposition, vertical_decomposition
from .cutting import CuttingResult, weak_cutting
