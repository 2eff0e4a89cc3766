from typing import Any, NamedTuple

#: Preference ranks are small non-negative integers. Lower ranks are preferred.
Rank = int

ARTIFACT_KINDS = ("class", "sigma", "teacher-map")


class NamedArtifact(NamedTuple):
    """
    A named, bundled object: a hypothesis class, a preference function or a
    teacher map.
    """

    kind: str
    name: str
    payload: Any

    def to_json(self):
        from .utils import to_json

        return {"kind": self.kind, "name": self.name, "payload": to_json(self.payload)}


class PyteachError(Exception):
    """
    Base class for all errors raised by pyteach.
    """


class ValidationError(PyteachError, ValueError):
    """
    Raised on invalid user input: bad indices, malformed classes, hypotheses
    outside a version space and so on.
    """


class CapacityError(PyteachError, RuntimeError):
    """
    Raised when an exact search would exceed one of the configured caps.
    """


class UnreachableError(PyteachError):
    """
    Raised when a plan is requested for a target that no finite teaching
    strategy can reach.
    """


class ConstructionError(PyteachError, RuntimeError):
    """
    Raised when an internal invariant of a construction is violated.
    """


class ImproperlyConfigured(PyteachError):
    """
    Exception raised when trying to set invalid configuration options.
    """
