"""
Hypothesis classes, version spaces and consistency primitives.
"""
# flake8: noqa
from .hypothesis_class import HypothesisClass, LabeledExample
from .version_space import (
    VersionSpace,
    PatternSet,
    as_version_space,
    consistent,
    count_patterns,
    hamming,
    reachable_version_spaces,
    restrict_patterns,
    version_space,
)
from .io import read_class, read_csv, read_json, write_csv, write_json, to_frame, class_from_json
