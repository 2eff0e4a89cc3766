"""
Pyteach

Exact complexity of sequential machine teaching under learner preferences.
"""
# flake8: noqa
__version__ = "0.1.0"
__author__ = "Fábio Mendes"

from . import config
from . import core
from . import dims
from . import prefs
from . import teach
from . import corpus
from . import construct
from .core import HypothesisClass, LabeledExample, VersionSpace
from .corpus import appendix_class, get_class, get_sigma, powerset_class, warmuth_class
from .logging import log
from .types import (
    CapacityError,
    ConstructionError,
    ImproperlyConfigured,
    PyteachError,
    UnreachableError,
    ValidationError,
)
