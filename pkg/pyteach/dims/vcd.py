from itertools import combinations
from typing import Iterable

from ..core import VersionSpace, as_version_space, count_patterns
from ..types import ValidationError


def is_shattered(X: Iterable[int], H: VersionSpace) -> bool:
    """
    True if H realizes all 2^|X| patterns on X.
    """
    X = list(X)
    return count_patterns(H, X) == 2 ** len(X)


def vcd(H: VersionSpace, X: Iterable = None) -> int:
    """
    VC dimension of H restricted to instances X.

    Shattering is closed under subsets, so the search stops at the first
    size with no shattered set.

    Examples:
        >>> vcd(warmuth_class())
        2
    """
    H = as_version_space(H)
    if not H:
        raise ValidationError("VC dimension of an empty version space is undefined")
    if X is None:
        X = range(H.cls.num_instances)
    X = sorted({H.cls.instance(x) for x in X})

    d = 0
    while d < len(X) and 2 ** (d + 1) <= len(H):
        if not any(is_shattered(S, H) for S in combinations(X, d + 1)):
            break
        d += 1
    return d


def shattered_set(H: VersionSpace, X: Iterable = None):
    """
    Lexicographically first shattered set of maximum size.
    """
    H = as_version_space(H)
    X = sorted(range(H.cls.num_instances) if X is None else {H.cls.instance(x) for x in X})
    d = vcd(H, X)
    return next(S for S in combinations(X, d) if is_shattered(S, H))
