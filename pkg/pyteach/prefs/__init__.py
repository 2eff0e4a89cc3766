"""
Preference functions, candidate sets and collusion checks.
"""
# flake8: noqa
from .preference import (
    FAMILIES,
    PreferenceFunction,
    ConstPreference,
    GlobalPreference,
    LocalPreference,
    GvsPreference,
    LvsPreference,
    SubsetRule,
)
from .candidates import candidate_set
from .collusion import (
    CollusionReport,
    Counterexample,
    collusion_free_check,
    collusion_free_exhaustive,
)
from .builders import (
    as_global,
    const,
    global_from_order,
    global_from_rtd,
    gvs_from_teacher_map,
    hamming_local,
)


def evaluate(sigma: PreferenceFunction, h_prime, H, h):
    """
    Rank σ(h'; H, h).

    See Also:
        PreferenceFunction.evaluate
    """
    return sigma.evaluate(h_prime, H, h)
