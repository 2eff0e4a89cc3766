"""
Bundled hypothesis classes, preference functions and teacher maps, with a
registry resolving them by name or by file path.
"""
import json
import re
from pathlib import Path
from typing import List

from .classes import appendix_class, powerset_class, warmuth_class
from .generators import random_class, random_classes
from .sigmas import bundled_sigmas, teacher_map
from ..core import HypothesisClass, read_class
from ..dims import TeacherMap
from ..prefs import PreferenceFunction, const, global_from_rtd, hamming_local
from ..types import ARTIFACT_KINDS, NamedArtifact, ValidationError

CLASSES = {"warmuth": warmuth_class, "appendix": appendix_class}
POWERSET = re.compile(r"powerset-(\d+)$")

#: Preferences derived from any class
BUILDERS = {"const": const, "hamming": hamming_local, "rtd-order": global_from_rtd}


def list_artifacts(kind: str = None) -> List[NamedArtifact]:
    """
    List bundled artifacts, optionally filtered by kind.
    """
    if kind is not None and kind not in ARTIFACT_KINDS:
        raise ValidationError(f"invalid kind. Must be one of {ARTIFACT_KINDS}, got {kind!r}")
    out = [NamedArtifact("class", name, fn()) for name, fn in CLASSES.items()]
    out.extend(bundled_sigmas())
    if kind is not None:
        out = [a for a in out if a.kind == kind]
    return out


def get_artifact(kind: str, name: str) -> NamedArtifact:
    """
    Return the bundled artifact with the given kind and name.
    """
    for artifact in list_artifacts(kind):
        if artifact.name == name:
            return artifact
    names = [a.name for a in list_artifacts(kind)]
    raise ValidationError(f"invalid {kind} name. Must be one of {names}, got {name!r}")


def get_class(ref) -> HypothesisClass:
    """
    Resolve a hypothesis class from a bundled name ("warmuth", "appendix",
    "powerset-<k>"), a path to a .csv/.json file or a HypothesisClass.
    """
    if isinstance(ref, HypothesisClass):
        return ref
    ref = str(ref)
    if ref in CLASSES:
        return CLASSES[ref]()
    m = POWERSET.match(ref)
    if m:
        return powerset_class(int(m.group(1)))
    if Path(ref).exists():
        return read_class(ref)
    names = [*CLASSES, "powerset-<k>"]
    raise ValidationError(f"invalid class. Must be one of {names} or a file path, got {ref!r}")


def get_sigma(ref, cls: HypothesisClass = None) -> PreferenceFunction:
    """
    Resolve a preference function from a bundled name ("warmuth-lvs", ...),
    a builder name applied to the class ("const", "hamming", "rtd-order")
    or a path to a JSON file. Builders and files require the class.
    """
    if isinstance(ref, PreferenceFunction):
        return ref
    ref = str(ref)
    if ref in BUILDERS:
        if cls is None:
            raise ValidationError(f"preference {ref!r} requires a hypothesis class")
        return BUILDERS[ref](cls)
    if ref in {a.name for a in list_artifacts("sigma")}:
        sigma = get_artifact("sigma", ref).payload
        if cls is not None and sigma.cls is not cls and sigma.cls.rows != cls.rows:
            raise ValidationError(f"preference {ref!r} belongs to another class")
        return sigma
    path = Path(ref)
    if not path.exists():
        raise ValidationError(f"invalid preference. Not a bundled name or a file: {ref!r}")
    if cls is None:
        raise ValidationError("a hypothesis class is required to read a preference file")
    with path.open() as fd:
        return PreferenceFunction.from_json(json.load(fd), cls)


def get_teacher_map(ref, cls: HypothesisClass = None) -> TeacherMap:
    """
    Resolve a teacher map from a bundled name or a path to a JSON file.
    """
    ref = str(ref)
    if ref in {a.name for a in list_artifacts("teacher-map")}:
        return get_artifact("teacher-map", ref).payload
    path = Path(ref)
    if not path.exists() or cls is None:
        raise ValidationError(f"invalid teacher map: {ref!r}")
    with path.open() as fd:
        return TeacherMap.from_json(json.load(fd), cls)
