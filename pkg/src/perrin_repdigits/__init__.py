"""Perrin numbers that are concatenations of two distinct repdigits.

Exact sequence evaluation, certified ball arithmetic, continued fractions
and the reductions that bound every solution, plus a replay pipeline that
ties them together.
"""

from .realfield import PrecisionReal, plastic_root, log_certified, nearest_int_distance
from .sequences import PERRIN, SequenceCache, term, root_data
from .repdigits import ConcatPattern, concat_value, decompose, repdigit_value
from .contfrac import ContinuedFraction, expand, a_max, tau
from .search import SolutionRecord, brute_search, verify_candidate
from .pipeline import Certificate, run_pipeline, emit_report, parse_report

__version__ = "0.1.0"
