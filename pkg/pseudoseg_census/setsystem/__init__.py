"""
Set-system subpackage for pseudoseg_census: shatter functions, packing and the delta codec.
"""

from .family import Subset, SetFamily, sym_diff_distance, is_separated
from .shatter import primal_shatter
from .shatter import dual_shatter
from .shatter import vc_dimension
from .shatter import sauer_shelah_bound
from .packing import GreedyOrdering, PackingReport
from .packing import greedy_ordering
from .packing import packing_check
from .codec import CodecOutput, encode, decode, codec_bit_bound
