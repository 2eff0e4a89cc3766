from itertools import combinations
from typing import List, Tuple

from ..core import LabeledExample, VersionSpace, as_version_space
from ..types import ValidationError


def eliminations(h: int, H: VersionSpace):
    """
    For each instance x, the members of H that disagree with h on x, as a
    list of bitmasks indexed by instance.
    """
    cls = H.cls
    row = cls.matrix[h]
    return [H.mask & cls.label_masks[x][1 - int(row[x])] for x in range(cls.num_instances)]


def minimal_teaching_set(h, H: VersionSpace) -> Tuple[LabeledExample, ...]:
    """
    A minimum-size set of examples consistent with h that leaves h as the
    only member of H. Ties go to the lexicographically smallest set of
    instances.

    Examples:
        >>> cls = warmuth_class()
        >>> [z.instance for z in minimal_teaching_set("h1", cls.full)]
        [0, 1, 3]
    """
    H = as_version_space(H)
    cls = H.cls
    h = cls.hypothesis(h)
    if h not in H:
        raise ValidationError(f"{cls.hypothesis_names[h]} is not in the version space")

    others = H.mask & ~(1 << h)
    if not others:
        return ()

    elim = eliminations(h, H)
    useful = [x for x in range(cls.num_instances) if elim[x]]
    for size in range(1, len(useful) + 1):
        for S in combinations(useful, size):
            union = 0
            for x in S:
                union |= elim[x]
            if union == others:
                return tuple(cls.example_for(h, x) for x in S)

    # unreachable: class rows are distinct
    raise ValidationError("hypothesis cannot be taught within the version space")


def teaching_sets(H: VersionSpace) -> dict:
    """
    Map each member of H to its minimal teaching set.
    """
    H = as_version_space(H)
    return {h: minimal_teaching_set(h, H) for h in H}


def td(H: VersionSpace) -> int:
    """
    Teaching dimension: largest minimal teaching set over the members of H.
    """
    H = as_version_space(H)
    if not H:
        raise ValidationError("teaching dimension of an empty version space is undefined")
    return max(len(S) for S in teaching_sets(H).values())


def rtd_layers(H: VersionSpace) -> List[Tuple[Tuple[int, ...], int]]:
    """
    Canonical recursive teaching peeling.

    Each layer is a pair (members, size) with the hypotheses whose minimal
    teaching set with respect to the remaining class has minimum size.
    """
    H = as_version_space(H)
    if not H:
        raise ValidationError("recursive teaching dimension of an empty version space is undefined")

    layers = []
    rest = H
    while rest:
        sizes = {h: len(minimal_teaching_set(h, rest)) for h in rest}
        smallest = min(sizes.values())
        layer = tuple(h for h, n in sizes.items() if n == smallest)
        layers.append((layer, smallest))
        for h in layer:
            rest = rest.without(h)
    return layers


def rtd(H: VersionSpace) -> int:
    """
    Recursive teaching dimension computed by canonical peeling.

    Examples:
        >>> rtd(appendix_class())
        2
    """
    return max(size for _, size in rtd_layers(H))
