from collections import deque
from typing import FrozenSet, Iterable, NamedTuple, Tuple

import numpy as np

from .hypothesis_class import HypothesisClass, LabeledExample
from ..types import CapacityError, ValidationError
from ..utils import iter_bits, mask_of, popcount


class VersionSpace:
    """
    A subset of the hypotheses of a class, stored as a bitmask over
    hypothesis indices.

    Version spaces are immutable and hashable. Operations mixing version
    spaces of different classes are errors.

    Examples:
        >>> H = cls.full
        >>> H.restrict(cls.example("x1", 1)).members
        (0, 4, 5, 7, 9)
    """

    __slots__ = ("cls", "mask")

    def __init__(self, cls: HypothesisClass, mask: int = None):
        if mask is None:
            mask = cls.full_mask
        if mask < 0 or mask & ~cls.full_mask:
            raise ValidationError(f"invalid version space mask for {cls}: {mask:#x}")
        self.cls = cls
        self.mask = mask

    @classmethod
    def from_members(cls, hypothesis_class: HypothesisClass, members: Iterable) -> "VersionSpace":
        """
        Create version space from hypothesis names or indices.
        """
        indices = [hypothesis_class.hypothesis(h) for h in members]
        return cls(hypothesis_class, mask_of(indices))

    def __repr__(self):
        names = ", ".join(self.cls.names_of(self.mask))
        return f"VersionSpace({{{names}}})"

    def __eq__(self, other):
        if isinstance(other, VersionSpace):
            return self.cls is other.cls and self.mask == other.mask
        return NotImplemented

    def __hash__(self):
        return hash((id(self.cls), self.mask))

    def __contains__(self, h):
        try:
            idx = self.cls.hypothesis(h)
        except ValidationError:
            return False
        return bool(self.mask >> idx & 1)

    def __len__(self):
        return popcount(self.mask)

    def __iter__(self):
        return iter_bits(self.mask)

    def __bool__(self):
        return self.mask != 0

    def __and__(self, other):
        self._check_class(other)
        return VersionSpace(self.cls, self.mask & other.mask)

    def __or__(self, other):
        self._check_class(other)
        return VersionSpace(self.cls, self.mask | other.mask)

    def __sub__(self, other):
        self._check_class(other)
        return VersionSpace(self.cls, self.mask & ~other.mask)

    def __le__(self, other):
        self._check_class(other)
        return self.mask & ~other.mask == 0

    def _check_class(self, other):
        if not isinstance(other, VersionSpace):
            raise TypeError(f"expected VersionSpace, got {type(other).__name__}")
        if self.cls is not other.cls:
            raise ValidationError("version spaces belong to different hypothesis classes")

    @property
    def members(self) -> Tuple[int, ...]:
        """
        Sorted tuple of member indices.
        """
        return tuple(iter_bits(self.mask))

    @property
    def key(self) -> Tuple[int, ...]:
        """
        Canonical key used for memoization and serialization.
        """
        return self.members

    @property
    def names(self):
        return self.cls.names_of(self.mask)

    def restrict(self, *examples: LabeledExample) -> "VersionSpace":
        """
        Keep only hypotheses consistent with all the given examples.
        """
        mask = self.mask
        for z in examples:
            mask &= self.cls.consistent_mask(z)
        return VersionSpace(self.cls, mask)

    def without(self, h) -> "VersionSpace":
        return VersionSpace(self.cls, self.mask & ~(1 << self.cls.hypothesis(h)))

    def matrix(self) -> np.ndarray:
        """
        Rows of the member hypotheses.
        """
        return self.cls.matrix[list(self.members)]

    def to_json(self):
        return list(self.members)


class PatternSet(NamedTuple):
    """
    Distinct patterns of a version space restricted to an instance subset.
    """

    instances: Tuple[int, ...]
    patterns: FrozenSet[Tuple[int, ...]]

    def __len__(self):
        return len(self.patterns)

    def to_json(self):
        return {
            "instances": list(self.instances),
            "patterns": ["".join(map(str, p)) for p in sorted(self.patterns)],
        }


def consistent(h, z: LabeledExample, cls: HypothesisClass) -> bool:
    """
    True if hypothesis h labels z.instance with z.label.

    Examples:
        >>> consistent("h1", LabeledExample(0, True), warmuth_class())
        True
    """
    return cls.label(h, z.instance) == bool(z.label)


def version_space(Z: Iterable[LabeledExample], cls: HypothesisClass) -> VersionSpace:
    """
    Version space induced by a set of examples. An empty set induces the
    full class; contradictory examples induce an empty version space.
    """
    return cls.full.restrict(*Z)


def as_version_space(H, cls: HypothesisClass = None) -> VersionSpace:
    """
    Coerce a class, a version space or a sequence of members into a version
    space.
    """
    if isinstance(H, VersionSpace):
        if cls is not None and H.cls is not cls:
            raise ValidationError("version space belongs to a different hypothesis class")
        return H
    if isinstance(H, HypothesisClass):
        return H.full
    if cls is None:
        raise ValidationError("a hypothesis class is required to build a version space")
    return VersionSpace.from_members(cls, H)


def restrict_patterns(H: VersionSpace, X: Iterable) -> PatternSet:
    """
    Distinct projections of the members of H onto the instances of X, taken
    in ascending instance order.

    Examples:
        >>> len(restrict_patterns(cls.full, [0, 1]))
        4
    """
    H = as_version_space(H)
    X = tuple(sorted({H.cls.instance(x) for x in X}))
    if not X:
        raise ValidationError("cannot restrict patterns to an empty instance set")
    sub = H.cls.matrix[np.ix_(list(H.members), list(X))].astype(int)
    patterns = frozenset(tuple(int(v) for v in row) for row in sub)
    return PatternSet(X, patterns)


def count_patterns(H: VersionSpace, X: Iterable) -> int:
    """
    Number of distinct patterns of H on X. Empty X yields a single empty
    pattern when H is non-empty.
    """
    X = list(X)
    if not H:
        return 0
    if not X:
        return 1
    sub = H.cls.matrix[np.ix_(list(H.members), X)]
    return len(np.unique(sub, axis=0))


def hamming(h, h2, cls: HypothesisClass) -> int:
    """
    Number of instances on which h and h2 disagree.
    """
    i, j = cls.hypothesis(h), cls.hypothesis(h2)
    return int(np.count_nonzero(cls.matrix[i] != cls.matrix[j]))


def reachable_version_spaces(cls: HypothesisClass, cap: int = None):
    """
    Every version space induced by some set of examples, including the full
    class and the empty version space, in breadth-first order.

    Raises CapacityError if more than cap version spaces are found.
    """
    start = cls.full_mask
    seen = {start}
    queue = deque([start])
    order = []
    while queue:
        mask = queue.popleft()
        order.append(VersionSpace(cls, mask))
        for pair in cls.label_masks:
            for label_mask in pair:
                new = mask & label_mask
                if new not in seen:
                    seen.add(new)
                    if cap is not None and len(seen) > cap:
                        raise CapacityError(f"more than {cap} reachable version spaces")
                    queue.append(new)
    return order
