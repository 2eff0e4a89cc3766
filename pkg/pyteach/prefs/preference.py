"""
Preference functions σ(h'; H, h) over the hypotheses of a class.

Lower ranks are preferred. Each family restricts which of the three
arguments the rank may depend on:

* ``const``: none;
* ``global``: h' only;
* ``local``: h' and the current hypothesis h;
* ``gvs``: h' and the version space H;
* ``lvs``: all three.
"""
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple

import numpy as np

from ..core import HypothesisClass, VersionSpace, as_version_space
from ..types import Rank, ValidationError
from ..utils import iter_bits, mask_of

FAMILIES = {}


def _rank(value) -> Rank:
    if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
        raise ValidationError(f"ranks must be integers, got {value!r}")
    if value < 0:
        raise ValidationError(f"ranks must be non-negative, got {value}")
    return int(value)


class PreferenceFunction:
    """
    Base class for all preference families.

    Subclasses implement :meth:`_rank`, which receives hypothesis indices
    and the version space as a bitmask.
    """

    family: str = None

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.family:
            FAMILIES[cls.family] = cls

    def __init__(self, cls: HypothesisClass):
        self.cls = cls
        self._candidates = {}

    def __repr__(self):
        return f"{type(self).__name__}({self.cls!r})"

    def _rank(self, h_prime: int, vmask: int, h: int) -> Rank:
        raise NotImplementedError

    def evaluate(self, h_prime, H: VersionSpace, h) -> Rank:
        """
        Rank σ(h'; H, h). h' must be a member of H.
        """
        H = as_version_space(H, self.cls)
        h_prime = self.cls.hypothesis(h_prime)
        h = self.cls.hypothesis(h)
        if h_prime not in H:
            name = self.cls.hypothesis_names[h_prime]
            raise ValidationError(f"{name} is not in the version space")
        return self._rank(h_prime, H.mask, h)

    def preferred(self, vmask: int, h: int) -> int:
        """
        Bitmask of the members of vmask with minimum rank, given the current
        hypothesis h. Results are memoized.
        """
        key = (vmask, h)
        try:
            return self._candidates[key]
        except KeyError:
            pass

        best = None
        out = 0
        for g in iter_bits(vmask):
            r = self._rank(g, vmask, h)
            if best is None or r < best:
                best, out = r, 1 << g
            elif r == best:
                out |= 1 << g
        self._candidates[key] = out
        return out

    def to_json(self):
        raise NotImplementedError

    @classmethod
    def from_json(cls, data: dict, hypothesis_class: HypothesisClass) -> "PreferenceFunction":
        """
        Load a preference function of any family from its JSON form.
        """
        try:
            family = data["family"]
        except (KeyError, TypeError):
            raise ValidationError("preference JSON must declare a family")
        try:
            kind = FAMILIES[family]
        except KeyError:
            names = ", ".join(map(repr, FAMILIES))
            raise ValidationError(f"invalid family. Must be one of {names}, got {family!r}")
        try:
            return kind._from_json(data, hypothesis_class)
        except (KeyError, TypeError, IndexError) as ex:
            raise ValidationError(f"malformed {family} preference: {ex}")

    @classmethod
    def _from_json(cls, data, hypothesis_class):
        raise NotImplementedError


class ConstPreference(PreferenceFunction):
    """
    Every hypothesis has the same rank.
    """

    family = "const"

    def __init__(self, cls, rank: Rank = 0):
        super().__init__(cls)
        self.rank = _rank(rank)

    def _rank(self, h_prime, vmask, h):
        return self.rank

    def to_json(self):
        return {"family": self.family, "rank": self.rank}

    @classmethod
    def _from_json(cls, data, hypothesis_class):
        return cls(hypothesis_class, data.get("rank", 0))


class GlobalPreference(PreferenceFunction):
    """
    A fixed rank per hypothesis.
    """

    family = "global"

    def __init__(self, cls, ranks: Sequence[Rank]):
        super().__init__(cls)
        ranks = tuple(map(_rank, ranks))
        if len(ranks) != cls.num_hypotheses:
            raise ValidationError(f"expected {cls.num_hypotheses} ranks, got {len(ranks)}")
        self.ranks = ranks

    def _rank(self, h_prime, vmask, h):
        return self.ranks[h_prime]

    def to_json(self):
        return {"family": self.family, "ranks": list(self.ranks)}

    @classmethod
    def _from_json(cls, data, hypothesis_class):
        return cls(hypothesis_class, data["ranks"])


class LocalPreference(PreferenceFunction):
    """
    Rank depends on the candidate and on the current hypothesis.

    ``table[h][h_prime]`` is the rank of h_prime when the learner holds h.
    """

    family = "local"

    def __init__(self, cls, table: Sequence[Sequence[Rank]]):
        super().__init__(cls)
        n = cls.num_hypotheses
        table = tuple(tuple(map(_rank, row)) for row in table)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError(f"local preference table must be {n}x{n}")
        self.table = table

    def _rank(self, h_prime, vmask, h):
        return self.table[h][h_prime]

    def to_json(self):
        return {"family": self.family, "ranks": [list(row) for row in self.table]}

    @classmethod
    def _from_json(cls, data, hypothesis_class):
        return cls(hypothesis_class, data["ranks"])


class GvsPreference(PreferenceFunction):
    """
    Rank depends on the candidate and on the version space. Pairs missing
    from ``entries`` receive the default rank.

    Args:
        cls:
            Hypothesis class.
        entries:
            Mapping from (version space mask, h_prime) to rank.
        default:
            Rank of every pair not listed in entries.
    """

    family = "gvs"

    def __init__(self, cls, entries: Dict[Tuple[int, int], Rank], default: Rank = 1):
        super().__init__(cls)
        self.default = _rank(default)
        self.entries = {}
        for (vmask, h_prime), rank in entries.items():
            vmask = VersionSpace(cls, vmask).mask
            self.entries[vmask, cls.hypothesis(h_prime)] = _rank(rank)

    def _rank(self, h_prime, vmask, h):
        return self.entries.get((vmask, h_prime), self.default)

    def to_json(self):
        entries = [
            {"vs": list(iter_bits(vmask)), "h_prime": h_prime, "rank": rank}
            for (vmask, h_prime), rank in sorted(self.entries.items())
        ]
        return {"family": self.family, "default": self.default, "entries": entries}

    @classmethod
    def _from_json(cls, data, hypothesis_class):
        entries = {
            (_vs_mask(e["vs"], hypothesis_class), e["h_prime"]): e["rank"] for e in data["entries"]
        }
        return cls(hypothesis_class, entries, data.get("default", 1))


class SubsetRule(NamedTuple):
    """
    Assign ``rank`` to ``h_prime`` whenever the current hypothesis is in
    ``current`` and the version space H satisfies
    ``required ⊆ H ⊆ required ∪ optional``.

    Masks are bitmasks over hypothesis indices.
    """

    h_prime: int
    current: int
    required: int
    optional: int
    rank: Rank

    def matches(self, h_prime, vmask, h) -> bool:
        return (
            h_prime == self.h_prime
            and self.current >> h & 1
            and vmask & self.required == self.required
            and vmask & ~(self.required | self.optional) == 0
        )

    def to_json(self):
        return {
            "h_prime": self.h_prime,
            "current": list(iter_bits(self.current)),
            "required": list(iter_bits(self.required)),
            "optional": list(iter_bits(self.optional)),
            "rank": self.rank,
        }


class LvsPreference(PreferenceFunction):
    """
    Rank depends on all three arguments.

    Lookup order: explicit ``entries`` for (H, h), then the first matching
    :class:`SubsetRule`, then ``self_rank`` if h' == h or ``other_rank``
    otherwise.

    Args:
        cls:
            Hypothesis class.
        entries:
            Mapping from (version space mask, h) to a dictionary {h': rank}.
        self_rank:
            Default rank of the current hypothesis.
        other_rank:
            Default rank of any other hypothesis.
        rules:
            Optional sequence of subset rules.
    """

    family = "lvs"

    def __init__(
        self,
        cls,
        entries: Dict[Tuple[int, int], Dict[int, Rank]] = None,
        self_rank: Rank = 0,
        other_rank: Rank = None,
        rules: Iterable[SubsetRule] = (),
    ):
        super().__init__(cls)
        self.self_rank = _rank(self_rank)
        self.other_rank = _rank(cls.num_hypotheses + 1 if other_rank is None else other_rank)
        self.entries = {}
        for (vmask, h), ranks in (entries or {}).items():
            vmask = VersionSpace(cls, vmask).mask
            key = (vmask, cls.hypothesis(h))
            self.entries[key] = {cls.hypothesis(g): _rank(r) for g, r in ranks.items()}
        self.rules = tuple(rules)
        for rule in self.rules:
            _rank(rule.rank)
            cls.hypothesis(rule.h_prime)

    def _rank(self, h_prime, vmask, h):
        ranks = self.entries.get((vmask, h))
        if ranks is not None and h_prime in ranks:
            return ranks[h_prime]
        for rule in self.rules:
            if rule.matches(h_prime, vmask, h):
                return rule.rank
        return self.self_rank if h_prime == h else self.other_rank

    def to_json(self):
        entries = [
            {
                "vs": list(iter_bits(vmask)),
                "h": h,
                "ranks": {str(g): r for g, r in sorted(ranks.items())},
            }
            for (vmask, h), ranks in sorted(self.entries.items())
        ]
        out = {
            "family": self.family,
            "defaults": {"self": self.self_rank, "other": self.other_rank},
            "entries": entries,
        }
        if self.rules:
            out["rules"] = [rule.to_json() for rule in self.rules]
        return out

    @classmethod
    def _from_json(cls, data, hypothesis_class):
        entries = {}
        for e in data.get("entries", ()):
            key = (_vs_mask(e["vs"], hypothesis_class), e["h"])
            entries[key] = {int(g): r for g, r in e["ranks"].items()}
        rules = [
            SubsetRule(
                h_prime=hypothesis_class.hypothesis(r["h_prime"]),
                current=_vs_mask(r["current"], hypothesis_class),
                required=_vs_mask(r["required"], hypothesis_class),
                optional=_vs_mask(r.get("optional", ()), hypothesis_class),
                rank=r["rank"],
            )
            for r in data.get("rules", ())
        ]
        defaults = data.get("defaults", {})
        return cls(
            hypothesis_class,
            entries,
            self_rank=defaults.get("self", 0),
            other_rank=defaults.get("other"),
            rules=rules,
        )


def _vs_mask(members, cls) -> int:
    return mask_of(cls.hypothesis(h) for h in members)
