from itertools import combinations
from typing import NamedTuple, Optional

from .preference import PreferenceFunction
from ..config import resolve_cap
from ..core import LabeledExample, VersionSpace, reachable_version_spaces
from ..logging import log
from ..types import CapacityError


class Counterexample(NamedTuple):
    """
    A state where the learner's uniquely preferred hypothesis is abandoned
    after examples consistent with it.

    ``example`` is the single added example for the stepwise checker, a
    tuple of examples for the exhaustive checker, or None when the preferred
    hypothesis is not self-preferred even without new examples.
    """

    version_space: VersionSpace
    current: int
    example: object
    preferred: VersionSpace

    def to_json(self):
        cls = self.version_space.cls
        if self.example is None:
            example = None
        elif isinstance(self.example, LabeledExample):
            example = cls.example_names([self.example])[0]
        else:
            example = cls.example_names(self.example)
        return {
            "version_space": self.version_space.names,
            "current": cls.hypothesis_names[self.current],
            "example": example,
            "preferred": self.preferred.names,
        }


class CollusionReport(NamedTuple):
    verdict: bool
    counterexample: Optional[Counterexample] = None

    def __bool__(self):
        return self.verdict

    def to_json(self):
        out = {"collusion_free": self.verdict}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        return out


def _premise_states(sigma: PreferenceFunction, cap):
    cls = sigma.cls
    cap = resolve_cap("collusion_max_states", cap)
    spaces = [V for V in reachable_version_spaces(cls, cap) if V]
    n_states = len(spaces) * cls.num_hypotheses
    if n_states > cap:
        raise CapacityError(f"collusion check limited to {cap} states, got {n_states}")
    log.debug(f"collusion: {len(spaces)} version spaces, {n_states} states")

    for V in spaces:
        for h in range(cls.num_hypotheses):
            best = sigma.preferred(V.mask, h)
            if best & (best - 1) == 0:
                yield V, h, best.bit_length() - 1


def collusion_free_check(sigma: PreferenceFunction, cap: int = None) -> CollusionReport:
    """
    Check whether σ is collusion-free.

    Explores every reachable version space paired with every current
    hypothesis. Whenever the preferred set is a single hypothesis ĥ, the
    learner must keep ĥ as its unique choice after any single example
    consistent with ĥ. Stepwise closure extends to arbitrary example sets
    because each refined state satisfies the premise again.

    Args:
        sigma:
            Preference function.
        cap:
            Largest number of (version space, hypothesis) states. Defaults
            to the ``collusion_max_states`` option.
    """
    cls = sigma.cls
    for V, h, top in _premise_states(sigma, cap):
        single = 1 << top
        stay = sigma.preferred(V.mask, top)
        if stay != single:
            return CollusionReport(False, Counterexample(V, h, None, VersionSpace(cls, stay)))
        for x in range(cls.num_instances):
            z = cls.example_for(top, x)
            refined = V.mask & cls.consistent_mask(z)
            preferred = sigma.preferred(refined, top)
            if preferred != single:
                ce = Counterexample(V, h, z, VersionSpace(cls, preferred))
                return CollusionReport(False, ce)
    return CollusionReport(True)


def collusion_free_exhaustive(sigma: PreferenceFunction, cap: int = None) -> CollusionReport:
    """
    Check collusion-freeness by enumerating every set of examples consistent
    with the preferred hypothesis. Exponential in the number of instances.

    See Also:
        collusion_free_check
    """
    cls = sigma.cls
    n = cls.num_instances
    for V, h, top in _premise_states(sigma, cap):
        single = 1 << top
        examples = [cls.example_for(top, x) for x in range(n)]
        for size in range(n + 1):
            for S in combinations(examples, size):
                refined = V.restrict(*S)
                preferred = sigma.preferred(refined.mask, top)
                if preferred != single:
                    ce = Counterexample(V, h, S or None, VersionSpace(cls, preferred))
                    return CollusionReport(False, ce)
    return CollusionReport(True)
