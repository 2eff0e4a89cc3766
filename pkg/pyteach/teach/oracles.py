from itertools import permutations

from .cost import CostTable, UNREACHABLE
from ..config import resolve_cap
from ..core import HypothesisClass
from ..logging import log
from ..prefs import GlobalPreference
from ..types import CapacityError


def sigma_td_global_bruteforce(cls: HypothesisClass, h0, cap: int = None):
    """
    Best teaching complexity over all Global preferences, by enumerating
    every total order of the hypotheses.

    Orders are abandoned as soon as one target is at least as expensive as
    the best order found so far.

    Args:
        cls:
            Hypothesis class.
        h0:
            Initial hypothesis.
        cap:
            Largest class size accepted. Defaults to the
            ``global_oracle_max`` option.
    """
    cap = resolve_cap("global_oracle_max", cap)
    n = cls.num_hypotheses
    if n > cap:
        raise CapacityError(f"global oracle limited to {cap} hypotheses, got {n}")
    h0 = cls.hypothesis(h0)

    best = UNREACHABLE
    for ranks in permutations(range(n)):
        sigma = GlobalPreference(cls, ranks)
        worst = 0
        for target in range(n):
            worst = max(worst, CostTable(sigma, target).cost(cls.full_mask, h0))
            if worst >= best:
                break
        else:
            best = worst
            log.debug(f"global oracle: improved to {best} with ranks {ranks}")
            if best <= 1:
                break
    return best
