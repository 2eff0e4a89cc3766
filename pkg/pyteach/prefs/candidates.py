from .preference import PreferenceFunction
from ..core import LabeledExample, VersionSpace, as_version_space


def candidate_set(
    sigma: PreferenceFunction, H: VersionSpace, h, z: LabeledExample
) -> VersionSpace:
    """
    Hypotheses the learner may move to after receiving z while holding h.

    The refined version space H ∩ ℋ({z}) is computed first and σ is
    evaluated against it. An empty refined space yields an empty result.

    Examples:
        >>> cls = warmuth_class()
        >>> candidate_set(hamming_local(cls), cls.full, "h1", cls.example("x1", 0)).names
        ['h2']
    """
    cls = sigma.cls
    H = as_version_space(H, cls)
    h = cls.hypothesis(h)
    V = H.restrict(z)
    if not V:
        return V
    return VersionSpace(cls, sigma.preferred(V.mask, h))
