"""
Preference functions and teaching sequences for the bundled classes.
"""
from typing import List

import sidekick as sk

from .classes import appendix_class, warmuth_class
from ..dims import TeacherMap
from ..prefs import (
    GlobalPreference,
    GvsPreference,
    LvsPreference,
    SubsetRule,
    const,
    hamming_local,
)
from ..types import NamedArtifact
from ..utils import mask_of

#: Partner of each Warmuth hypothesis in the two-element version spaces
#: preferred by the gvs preference
WARMUTH_PAIRS = {
    "h1": "h6",
    "h2": "h7",
    "h3": "h8",
    "h4": "h9",
    "h5": "h10",
    "h6": "h9",
    "h7": "h10",
    "h8": "h6",
    "h9": "h7",
    "h10": "h8",
}

#: Version spaces on which the Warmuth lvs preference still ranks h_j first
WARMUTH_SUPPORTS = {
    "h1": ("h5", "h6", "h8", "h10"),
    "h2": ("h1", "h7", "h6", "h9"),
    "h3": ("h2", "h7", "h8", "h10"),
    "h4": ("h3", "h6", "h8", "h9"),
    "h5": ("h4", "h7", "h9", "h10"),
    "h6": ("h1", "h4", "h5", "h9"),
    "h7": ("h1", "h2", "h5", "h10"),
    "h8": ("h1", "h2", "h3", "h6"),
    "h9": ("h2", "h3", "h4", "h7"),
    "h10": ("h3", "h4", "h5", "h8"),
}

WARMUTH_SEQUENCES = {
    "const": {
        "h1": "x1 x2 x4",
        "h2": "x2 x3 x5",
        "h3": "x1 x3 x4",
        "h4": "x2 x4 x5",
        "h5": "x1 x3 x5",
        "h6": "x1 x2 x4",
        "h7": "x2 x3 x5",
        "h8": "x1 x3 x4",
        "h9": "x2 x4 x5",
        "h10": "x1 x3 x5",
    },
    "gvs": {
        "h1": "x1 x2",
        "h2": "x2 x3",
        "h3": "x3 x4",
        "h4": "x4 x5",
        "h5": "x1 x5",
        "h6": "x2 x4",
        "h7": "x3 x5",
        "h8": "x1 x4",
        "h9": "x2 x5",
        "h10": "x1 x3",
    },
    "local": {
        "h1": "x1",
        "h2": "x3",
        "h3": "x3 x4",
        "h4": "x5 x4",
        "h5": "x5",
        "h6": "x4",
        "h7": "x3 x5",
        "h8": "x4 x3",
        "h9": "x4 x5",
        "h10": "x5 x3",
    },
    "lvs": {
        "h1": "x1",
        "h2": "x2",
        "h3": "x3",
        "h4": "x4",
        "h5": "x5",
        "h6": "x3",
        "h7": "x4",
        "h8": "x5",
        "h9": "x1",
        "h10": "x2",
    },
}

APPENDIX_SEQUENCES = {
    "const": {
        "h1": "x1 x6",
        "h2": "x2 x6",
        "h3": "x3 x4 x5",
        "h4": "x4 x5",
        "h5": "x4 x5",
        "h6": "x4 x5",
    },
    "global": {
        "h1": "x1 x6",
        "h2": "x2 x6",
        "h3": "x1",
        "h4": "x4 x5",
        "h5": "x4 x5",
        "h6": "x4 x5",
    },
    "gvs": {f"h{i}": f"x{i}" for i in range(1, 7)},
    "lvs": {
        "h1": "x2",
        "h2": "x2",
        "h3": "x3",
        "h4": "x4",
        "h5": "x5",
        "h6": "x4 x5",
    },
}

#: Version spaces on which the appendix gvs preference ranks h' first
APPENDIX_GVS = {
    "h1": ("h1 h3 h4 h5", "h1 h3 h4", "h1 h3 h5", "h1"),
    "h2": ("h2 h3 h4 h5", "h2 h3 h4", "h2 h3 h5", "h2"),
    "h3": ("h3 h4 h5", "h3 h4", "h3 h5", "h3"),
    "h4": ("h4 h6", "h4"),
    "h5": ("h5 h6", "h5"),
    "h6": ("h1 h2 h6", "h1 h6", "h2 h6", "h6"),
}

#: (version space, current hypothesis) -> ranks of the appendix lvs preference
APPENDIX_LVS = {
    ("h2 h3 h4 h5", "h1"): {"h2": 2, "h3": 7, "h4": 7, "h5": 7},
    ("h3 h4 h5", "h1"): {"h3": 3, "h4": 7, "h5": 7},
    ("h4 h6", "h1"): {"h4": 4, "h6": 6},
    ("h5 h6", "h1"): {"h5": 5, "h6": 7},
    ("h6", "h4"): {"h6": 6},
}


def _mask(cls, names) -> int:
    if isinstance(names, str):
        names = names.split()
    return mask_of(cls.hypothesis(h) for h in names)


def teacher_map(cls, sequences: dict) -> TeacherMap:
    """
    Build a teacher map from instance sequences, labeling each instance with
    the target hypothesis.
    """
    mapping = {}
    for h, instances in sequences.items():
        h = cls.hypothesis(h)
        mapping[h] = [cls.example_for(h, cls.instance(x)) for x in instances.split()]
    return TeacherMap(cls, mapping)


def warmuth_gvs() -> GvsPreference:
    cls = warmuth_class()
    entries = {}
    for h, partner in WARMUTH_PAIRS.items():
        entries[_mask(cls, [h, partner]), h] = 0
        entries[_mask(cls, [h]), h] = 0
    return GvsPreference(cls, entries, default=1)


def warmuth_lvs() -> LvsPreference:
    cls = warmuth_class()
    rules = []
    for h, support in WARMUTH_SUPPORTS.items():
        rule = SubsetRule(
            h_prime=cls.hypothesis(h),
            current=_mask(cls, {"h1", h}),
            required=_mask(cls, [h]),
            optional=_mask(cls, support),
            rank=0,
        )
        rules.append(rule)
    return LvsPreference(cls, self_rank=1, other_rank=1, rules=rules)


def appendix_global() -> GlobalPreference:
    cls = appendix_class()
    return GlobalPreference(cls, [0 if h == "h3" else 1 for h in cls.hypothesis_names])


def appendix_gvs() -> GvsPreference:
    cls = appendix_class()
    entries = {}
    for h, spaces in APPENDIX_GVS.items():
        for members in spaces:
            entries[_mask(cls, members), h] = 0
    return GvsPreference(cls, entries, default=1)


def appendix_lvs() -> LvsPreference:
    cls = appendix_class()
    entries = {(_mask(cls, vs), h): ranks for (vs, h), ranks in APPENDIX_LVS.items()}
    return LvsPreference(cls, entries, self_rank=0, other_rank=8)


@sk.once
def bundled_sigmas() -> List[NamedArtifact]:
    """
    Named preference functions and teaching sequences for the Warmuth and
    appendix classes.
    """
    warmuth = warmuth_class()
    appendix = appendix_class()
    sigmas = {
        "warmuth-const": const(warmuth),
        "warmuth-global": GlobalPreference(warmuth, [0] * warmuth.num_hypotheses),
        "warmuth-local": hamming_local(warmuth),
        "warmuth-gvs": warmuth_gvs(),
        "warmuth-lvs": warmuth_lvs(),
        "appendix-const": const(appendix),
        "appendix-global": appendix_global(),
        "appendix-gvs": appendix_gvs(),
        "appendix-lvs": appendix_lvs(),
    }
    out = [NamedArtifact("sigma", name, sigma) for name, sigma in sigmas.items()]
    for prefix, cls, table in [
        ("warmuth", warmuth, WARMUTH_SEQUENCES),
        ("appendix", appendix, APPENDIX_SEQUENCES),
    ]:
        for family, sequences in table.items():
            name = f"{prefix}-{family}"
            out.append(NamedArtifact("teacher-map", name, teacher_map(cls, sequences)))
    return out
