"""
Census subpackage for pseudoseg_census: exhaustive verification experiments.
"""

from .split import SplitNode, strip_split, check_split_tree
from .dilworth import PermutationPoset, dilworth_color, longest_decreasing_length
from .traces import TraceBoundResult, trace_bound_check, random_trace_instance
from .traces import crossing_set_system, trace_trials
from .grounded import GroundedCensus, enumerate_double_grounded
from .equation import HRelation, h_relation_counts, verify_h_relation
from .tables import bound_table, format_bound_table
