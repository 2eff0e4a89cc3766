"""
Standard preference functions derived from a hypothesis class or from one
of its classical teaching witnesses.
"""
from collections import deque
from typing import Optional, Sequence

import numpy as np

from .preference import (
    ConstPreference,
    GlobalPreference,
    GvsPreference,
    LocalPreference,
    PreferenceFunction,
)
from ..core import HypothesisClass, reachable_version_spaces
from ..dims import TeacherMap, rtd_layers
from ..types import ValidationError


def const(cls: HypothesisClass, rank=0) -> ConstPreference:
    """
    The constant preference: every consistent hypothesis is a candidate.
    """
    return ConstPreference(cls, rank)


def hamming_local(cls: HypothesisClass) -> LocalPreference:
    """
    Local preference ranking h' by its Hamming distance to the current
    hypothesis h.
    """
    m = cls.matrix.astype(np.int8)
    table = (m[:, None, :] != m[None, :, :]).sum(axis=2)
    return LocalPreference(cls, table.tolist())


def global_from_order(cls: HypothesisClass, order: Sequence) -> GlobalPreference:
    """
    Global preference from a sequence of hypotheses, most preferred first.
    """
    order = [cls.hypothesis(h) for h in order]
    if sorted(order) != list(range(cls.num_hypotheses)):
        raise ValidationError(
            f"order must list each of the {cls.num_hypotheses} hypotheses exactly once, got {order}"
        )
    ranks = [0] * cls.num_hypotheses
    for i, h in enumerate(order):
        ranks[h] = i
    return GlobalPreference(cls, ranks)


def global_from_rtd(cls: HypothesisClass) -> GlobalPreference:
    """
    Global preference from the recursive teaching peeling: hypotheses peeled
    later are preferred, so earlier layers never interfere with the teaching
    sets of later ones.
    """
    layers = rtd_layers(cls.full)
    ranks = [0] * cls.num_hypotheses
    for i, (layer, _) in enumerate(layers):
        for h in layer:
            ranks[h] = len(layers) - 1 - i
    return GlobalPreference(cls, ranks)


def gvs_from_teacher_map(T: TeacherMap, default=1) -> GvsPreference:
    """
    Version-space preference built from a non-clashing teacher map.

    Hypothesis h gets rank 0 on every version space ℋ(S) where S contains
    T(h) and is consistent with h. Every other pair gets the default rank.
    """
    cls = T.cls
    entries = {}
    for h in T:
        start = T.consistent_mask(h)
        seen = {start}
        queue = deque([start])
        while queue:
            mask = queue.popleft()
            entries[mask, h] = 0
            for x in range(cls.num_instances):
                new = mask & cls.consistent_mask(cls.example_for(h, x))
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
    return GvsPreference(cls, entries, default)


def as_global(sigma: PreferenceFunction, cap: int = None) -> Optional[GlobalPreference]:
    """
    Return an equivalent Global preference if σ ignores both its version
    space and current hypothesis arguments on every reachable version
    space, or None otherwise.
    """
    cls = sigma.cls
    ranks = [None] * cls.num_hypotheses
    for V in reachable_version_spaces(cls, cap):
        for h_prime in V:
            for h in range(cls.num_hypotheses):
                r = sigma._rank(h_prime, V.mask, h)
                if ranks[h_prime] is None:
                    ranks[h_prime] = r
                elif ranks[h_prime] != r:
                    return None
    return GlobalPreference(cls, ranks)
