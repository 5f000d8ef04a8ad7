"""
Geometry subpackage for pseudoseg_census: exact curves, graphs and predicates.
"""

from .curves import Rat, as_rat, MonotoneCurve, CurveFamily
from .graphs import LabelledGraph
from .predicates import crossing_points
from .predicates import crossing_count
from .predicates import intersection_graph
from .predicates import is_pseudosegment_family
from .predicates import is_double_grounded
from .predicates import neighborhood_interval_check
