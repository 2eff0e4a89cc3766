"""
Constructions of preference functions with bounded teaching complexity.
"""
# flake8: noqa
from .partition import Block, Partition, partition_class
from .lvs import LvsConstruction, RecursionRecord, build_sigma_lvs, check_unique_version_spaces
from .powerset import PowersetConstruction, build_sigma_local_powerset, min_depth
