"""
Teaching costs, plans and protocol replay.
"""
# flake8: noqa
from .cost import UNREACHABLE, CostTable, d_sigma, d_sigma_naive, target_costs, td_sigma
from .plans import TeachingPlan, extract_plan
from .protocol import TIE_MODES, Trace, simulate
from .oracles import sigma_td_global_bruteforce
