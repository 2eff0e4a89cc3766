from typing import Iterable, Tuple

from ..core import VersionSpace, as_version_space, count_patterns
from ..types import ValidationError


def _instances(H: VersionSpace, X) -> Tuple[int, ...]:
    if X is None:
        return tuple(range(H.cls.num_instances))
    return tuple(sorted({H.cls.instance(x) for x in X}))


def is_distinguishable(X: Iterable, H: VersionSpace) -> bool:
    """
    True if X separates every pair of hypotheses of H, i.e., the members of H
    have pairwise distinct patterns on X.

    An empty X distinguishes only version spaces with at most one member.
    """
    H = as_version_space(H)
    return count_patterns(H, _instances(H, X)) == len(H)


def is_compact(X: Iterable, H: VersionSpace) -> bool:
    """
    True if X is H-distinguishable and no proper subset of X is.

    Distinguishability is monotone, so testing single removals suffices.
    """
    H = as_version_space(H)
    X = _instances(H, X)
    if not is_distinguishable(X, H):
        return False
    return not any(is_distinguishable(X[:i] + X[i + 1 :], H) for i in range(len(X)))


def compact_distinguishable_set(H: VersionSpace, X: Iterable = None) -> Tuple[int, ...]:
    """
    A compact-distinguishable subset of X for H.

    Instances are scanned in ascending order and dropped whenever the
    remainder still distinguishes H.

    Args:
        H:
            Version space or hypothesis class.
        X:
            Candidate instances. Defaults to every instance of the class.

    Examples:
        >>> compact_distinguishable_set(appendix_class())
        (1, 3, 4, 5)
    """
    H = as_version_space(H)
    X = list(_instances(H, X))
    if not is_distinguishable(X, H):
        raise ValidationError("instance set does not distinguish the version space")

    for x in list(X):
        rest = [y for y in X if y != x]
        if is_distinguishable(rest, H):
            X = rest
    return tuple(X)
