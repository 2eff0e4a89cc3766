from collections.abc import Mapping
from itertools import combinations
from typing import Dict, Optional, Tuple

from ..config import resolve_cap
from ..core import HypothesisClass, LabeledExample, VersionSpace, as_version_space
from ..logging import log
from ..types import CapacityError, ValidationError


class TeacherMap(Mapping):
    """
    A teacher mapping: assigns a sequence of labeled examples to each
    hypothesis of a class.

    Each sequence must be consistent with its hypothesis and must not repeat
    instances.

    Args:
        cls:
            Governing hypothesis class.
        mapping:
            Dictionary from hypothesis (name or index) to a sequence of
            examples given as LabeledExample or (instance, label) pairs.
    """

    def __init__(self, cls: HypothesisClass, mapping: dict):
        self.cls = cls
        data = {}
        for h, examples in mapping.items():
            h = cls.hypothesis(h)
            seq = tuple(cls.example(x, y) for x, y in examples)
            instances = [z.instance for z in seq]
            if len(set(instances)) != len(instances):
                raise ValidationError(f"repeated instance in T({cls.hypothesis_names[h]})")
            for z in seq:
                if cls.label(h, z.instance) != z.label:
                    name = cls.hypothesis_names[h]
                    raise ValidationError(f"T({name}) is inconsistent with {name}")
            data[h] = seq
        self._data = dict(sorted(data.items()))

    def __getitem__(self, h):
        return self._data[self.cls.hypothesis(h)]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __repr__(self):
        return f"TeacherMap({self.to_json()})"

    @property
    def size(self) -> int:
        """
        Largest number of examples assigned to a single hypothesis.
        """
        return max((len(seq) for seq in self._data.values()), default=0)

    def consistent_mask(self, h) -> int:
        """
        Bitmask of hypotheses of the class consistent with T(h).
        """
        return self.cls.full.restrict(*self[h]).mask

    def to_json(self):
        cls = self.cls
        return {cls.hypothesis_names[h]: cls.example_names(seq) for h, seq in self._data.items()}

    @classmethod
    def from_json(cls, data: dict, hypothesis_class: HypothesisClass) -> "TeacherMap":
        mapping = {h: [(x, y) for x, y in seq] for h, seq in data.items()}
        return cls(hypothesis_class, mapping)


def find_clash(T: TeacherMap, H: VersionSpace = None) -> Optional[Tuple[int, int]]:
    """
    Return the first pair (h, h') of distinct members of H such that T(h) is
    consistent with h' and T(h') is consistent with h, or None if the map is
    non-clashing on H.
    """
    H = T.cls.full if H is None else as_version_space(H, T.cls)
    missing = [h for h in H if h not in T]
    if missing:
        names = ", ".join(T.cls.names_of(sum(1 << h for h in missing)))
        raise ValidationError(f"teacher map is not defined for: {names}")

    masks = {h: T.consistent_mask(h) for h in H}
    for h, g in combinations(H, 2):
        if masks[h] >> g & 1 and masks[g] >> h & 1:
            return h, g
    return None


def is_non_clashing(T: TeacherMap, H: VersionSpace = None) -> bool:
    """
    True if no two distinct members of H clash under T.

    See Also:
        find_clash
    """
    return find_clash(T, H) is None


def informative_instances(H: VersionSpace) -> Tuple[int, ...]:
    """
    Instances that split H, keeping only the first of any group of columns
    that are equal or complementary on H.
    """
    seen = set()
    out = []
    for x, (m0, m1) in enumerate(H.cls.label_masks):
        a, b = H.mask & m0, H.mask & m1
        if not a or not b:
            continue
        key = min(a, b)
        if key not in seen:
            seen.add(key)
            out.append(x)
    return tuple(out)


def _candidates(h: int, H: VersionSpace, instances, k) -> Dict[int, Tuple[int, ...]]:
    # Map consistency mask -> first instance subset of size <= k producing it,
    # keeping only inclusion-minimal masks.
    cls = H.cls
    row = cls.matrix[h]
    best = {}
    for size in range(k + 1):
        for S in combinations(instances, size):
            mask = H.mask
            for x in S:
                mask &= cls.label_masks[x][int(row[x])]
            best.setdefault(mask, S)
    minimal = {
        m: S for m, S in best.items() if not any(o != m and o & ~m == 0 for o in best)
    }
    return minimal


def _clash(h, mh, g, mg):
    return mh >> g & 1 and mg >> h & 1


def _search(domains: Dict[int, list]) -> Optional[Dict[int, int]]:
    assignment = {}

    def backtrack(domains):
        if len(assignment) == len(domains):
            return True
        # minimum remaining values
        h = min((g for g in domains if g not in assignment), key=lambda g: len(domains[g]))
        for mh in domains[h]:
            pruned = {}
            ok = True
            for g, values in domains.items():
                if g in assignment or g == h:
                    pruned[g] = values
                    continue
                kept = [mg for mg in values if not _clash(h, mh, g, mg)]
                if not kept:
                    ok = False
                    break
                pruned[g] = kept
            if not ok:
                continue
            assignment[h] = mh
            pruned[h] = [mh]
            if backtrack(pruned):
                return True
            del assignment[h]
        return False

    return dict(assignment) if backtrack(domains) else None


def nctd(H: VersionSpace, cap: int = None) -> Tuple[int, TeacherMap]:
    """
    Non-clashing teaching dimension and a witness teacher map.

    Iterative deepening on the bound k. For each k, every member receives
    the inclusion-minimal consistency masks reachable with at most k
    informative instances and a backtracking search with forward checking
    looks for a pairwise non-clashing assignment.

    Args:
        H:
            Version space or hypothesis class.
        cap:
            Largest number of hypotheses accepted. Defaults to the
            ``nctd_max_hypotheses`` option.

    Examples:
        >>> nctd(appendix_class())[0]
        1
    """
    H = as_version_space(H)
    cls = H.cls
    if not H:
        raise ValidationError("non-clashing teaching dimension of an empty version space is undefined")
    cap = resolve_cap("nctd_max_hypotheses", cap)
    if len(H) > cap:
        raise CapacityError(f"nctd search limited to {cap} hypotheses, got {len(H)}")
    if len(H) == 1:
        return 0, TeacherMap(cls, {h: () for h in H})

    instances = informative_instances(H)
    for k in range(1, len(instances) + 1):
        candidates = {h: _candidates(h, H, instances, k) for h in H}
        domains = {
            h: sorted(c, key=lambda m: (bin(m).count("1"), len(c[m]), c[m]))
            for h, c in candidates.items()
        }
        log.debug(f"nctd: trying k={k} with {sum(map(len, domains.values()))} candidates")
        assignment = _search(domains)
        if assignment is not None:
            mapping = {
                h: [(x, cls.label(h, x)) for x in candidates[h][mh]]
                for h, mh in assignment.items()
            }
            return k, TeacherMap(cls, mapping)

    # unreachable: full informative sets identify every member
    raise ValidationError("no non-clashing teacher map exists")
