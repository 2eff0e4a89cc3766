"""
Hypothesis classes bundled with pyteach.
"""
import numpy as np
import sidekick as sk

from ..config import resolve_cap
from ..core import HypothesisClass
from ..db import read_class
from ..types import CapacityError, ValidationError


@sk.once
def warmuth_class() -> HypothesisClass:
    """
    The 10 hypotheses over 5 instances with VC dimension 2 and no teaching
    set smaller than 3.

    Examples:
        >>> warmuth_class().num_hypotheses
        10
    """
    return read_class("classes/warmuth")


@sk.once
def appendix_class() -> HypothesisClass:
    """
    Six hypotheses over 6 instances in which a global preference beats
    every batch model.
    """
    return read_class("classes/appendix")


@sk.lru_cache(32)
def powerset_class(k: int, cap: int = None) -> HypothesisClass:
    """
    All 2^k labelings of k instances.

    Hypotheses are named by their bit strings and row i holds the binary
    expansion of i, with instance x0 as the most significant bit.

    Examples:
        >>> powerset_class(2).hypothesis_names
        ('00', '01', '10', '11')
    """
    cap = resolve_cap("powerset_max_k", cap)
    if not isinstance(k, int) or k < 1:
        raise ValidationError(f"k must be a positive integer, got {k!r}")
    if k > cap:
        raise CapacityError(f"powerset class limited to k={cap}, got {k}")

    shifts = np.arange(k - 1, -1, -1)
    rows = (np.arange(2 ** k)[:, None] >> shifts) & 1
    names = [format(i, f"0{k}b") for i in range(2 ** k)]
    instances = [f"x{j}" for j in range(k)]
    return HypothesisClass(rows.tolist(), instances, names, name=f"powerset-{k}")
