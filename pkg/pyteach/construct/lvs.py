"""
Recursive construction of a local version-space preference whose teaching
complexity is bounded by the VC dimension of the class.
"""
from typing import Dict, List, NamedTuple, Tuple

from .partition import partition_class
from ..core import HypothesisClass, LabeledExample, VersionSpace
from ..dims import compact_distinguishable_set, is_compact
from ..logging import log
from ..prefs import LvsPreference
from ..teach import TeachingPlan
from ..types import ConstructionError, ValidationError


class RecursionRecord(NamedTuple):
    """
    One block assignment made by the construction.
    """

    depth: int
    current: int
    block: VersionSpace
    pivot: int
    label: bool
    version_space: VersionSpace
    next: int

    def to_json(self):
        cls = self.block.cls
        names = cls.hypothesis_names
        return {
            "depth": self.depth,
            "current": names[self.current],
            "block": self.block.names,
            "pivot": [cls.instance_names[self.pivot], int(self.label)],
            "version_space": self.version_space.names,
            "next": names[self.next],
        }


class LvsConstruction(NamedTuple):
    sigma: LvsPreference
    plans: Dict[int, TeachingPlan]
    index: Dict[int, int]
    records: List[RecursionRecord]
    degenerate: bool = False

    @property
    def cost(self) -> int:
        """
        Length of the longest plan.
        """
        return max(len(p) for p in self.plans.values())

    def to_json(self, trace=False):
        cls = self.sigma.cls
        out = {
            "sigma": self.sigma.to_json(),
            "plans": {cls.hypothesis_names[h]: p.to_json() for h, p in self.plans.items()},
            "index": {cls.hypothesis_names[h]: i for h, i in self.index.items()},
            "degenerate": self.degenerate,
        }
        if trace:
            out["trace"] = [r.to_json() for r in self.records]
        return out


def check_unique_version_spaces(H: VersionSpace, compact_set):
    """
    Raise ConstructionError if two distinct examples over the compact set
    induce the same subset of H.
    """
    cls = H.cls
    seen = {}
    for x in compact_set:
        for y in (0, 1):
            sub = H.mask & cls.label_masks[x][y]
            if sub in seen:
                (x0, y0) = seen[sub]
                raise ConstructionError(
                    f"examples ({cls.instance_names[x0]},{y0}) and ({cls.instance_names[x]},{y}) "
                    f"induce the same version space {cls.names_of(sub)}"
                )
            seen[sub] = (x, y)


def build_sigma_lvs(cls: HypothesisClass, h0, compact_set=None) -> LvsConstruction:
    """
    Build a collusion-free local version-space preference with teaching
    complexity at most the VC dimension of the class, together with one
    teaching plan per hypothesis.

    Every hypothesis prefers itself (rank 0) and ranks everything else
    below the class size unless the recursion assigns a block rank. The
    index of a hypothesis is its row number plus one.

    Args:
        cls:
            Hypothesis class.
        h0:
            Initial hypothesis of the learner.
        compact_set:
            Optional compact-distinguishable set used at the top level.
            Defaults to :func:`pyteach.dims.compact_distinguishable_set`.
    """
    h0 = cls.hypothesis(h0)
    n = cls.num_hypotheses
    index = {h: h + 1 for h in range(n)}
    if compact_set is not None:
        compact_set = tuple(sorted({cls.instance(x) for x in compact_set}))
        if not is_compact(compact_set, cls.full):
            raise ValidationError("instance set is not compact-distinguishable on the class")

    entries = {}
    paths: Dict[int, Tuple[Tuple[LabeledExample, int], ...]] = {}
    records = []

    def set_preference(V: VersionSpace, H: VersionSpace, X, h, path, depth):
        paths[h] = path
        if len(H) == 1:
            return
        if depth == 0 and compact_set is not None:
            Xbar = compact_set
        else:
            Xbar = compact_distinguishable_set(H, X)
        check_unique_version_spaces(H, Xbar)
        partition = partition_class(H, Xbar, h)

        for block in partition.blocks[:-1]:
            z = LabeledExample(block.pivot, block.label)
            V_next = V.restrict(z)
            ranks = {g: index[g] for g in block.members}
            key = (V_next.mask, h)
            if key in entries and entries[key] != ranks:
                raise ConstructionError(f"conflicting ranks for version space {V_next.names}")
            entries[key] = ranks
            h_next = min(block.members, key=index.__getitem__)
            record = RecursionRecord(depth, h, block.members, z.instance, z.label, V_next, h_next)
            records.append(record)
            log.debug(
                f"lvs: depth {depth}, block {block.members.names} at "
                f"({cls.instance_names[z.instance]},{int(z.label)}) -> {cls.hypothesis_names[h_next]}"
            )
            step = ((z, h_next),)
            set_preference(V_next, block.members, block.instances, h_next, path + step, depth + 1)

    set_preference(cls.full, cls.full, tuple(range(cls.num_instances)), h0, (), 0)
    sigma = LvsPreference(cls, entries, self_rank=0, other_rank=n + 1)

    degenerate = n == 1
    if degenerate:
        log.warning("lvs: singleton class, root plan uses the first instance")
        root_instance = 0
    else:
        root_instance = (compact_set or compact_distinguishable_set(cls.full))[0]

    plans = {}
    for h in range(n):
        path = paths.get(h)
        if path is None:
            raise ConstructionError(f"no plan for {cls.hypothesis_names[h]}")
        if not path:
            path = ((cls.example_for(h0, root_instance), h0),)
        steps = tuple(z for z, _ in path)
        trace = (h0,) + tuple(g for _, g in path)
        plans[h] = TeachingPlan(h, steps, trace, len(steps), cls)
    return LvsConstruction(sigma, plans, index, records, degenerate)
