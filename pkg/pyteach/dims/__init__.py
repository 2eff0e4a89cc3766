"""
Classical teaching dimensions and distinguishing sets.
"""
# flake8: noqa
from .vcd import vcd, is_shattered, shattered_set
from .teaching_sets import minimal_teaching_set, teaching_sets, td, rtd, rtd_layers
from .nctd import TeacherMap, nctd, find_clash, is_non_clashing, informative_instances
from .distinguish import is_distinguishable, is_compact, compact_distinguishable_set
from .bounds import counting_sum, sigma_td_lower_bound
from .report import DimensionReport, dimension_report
