from ..types import ValidationError


def counting_sum(d: int, k: int) -> int:
    """
    Number of distinct teaching sequences of length at most k over the 2d
    labeled examples of a d-instance domain: sum of (2d)^i for i = 0..k.
    """
    if d < 1 or k < 0:
        raise ValidationError(f"invalid arguments: d={d}, k={k}")
    return sum((2 * d) ** i for i in range(k + 1))


def sigma_td_lower_bound(d: int) -> int:
    """
    Smallest k such that 2^d <= counting_sum(d, k).

    Any preference-based teacher for the powerset of d instances must give
    each of the 2^d hypotheses a distinct sequence, so no strategy can teach
    them all with fewer than k examples.

    Examples:
        >>> sigma_td_lower_bound(4)
        2
    """
    if d < 1:
        raise ValidationError(f"d must be positive, got {d}")
    k = 0
    target = 2 ** d
    while counting_sum(d, k) < target:
        k += 1
    return k
