import os
from pathlib import Path
from typing import NamedTuple

import joblib
import sidekick as sk

from .types import ImproperlyConfigured

OVERRIDES = {}


class Options(NamedTuple):
    """
    Capacity caps and run options shared by the exact solvers.
    """

    nctd_max_hypotheses: int = 16
    collusion_max_states: int = 1_000_000
    global_oracle_max: int = 8
    powerset_max_k: int = 20
    zero_cost_at_target: bool = False
    n_jobs: int = 1


ENV_VARS = {field: "PYTEACH_" + field.upper() for field in Options._fields}


def _parse(field, value):
    if field == "zero_cost_at_target":
        if isinstance(value, str):
            return value.lower() in ("1", "true", "on")
        return bool(value)
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(f"invalid value for {field}: {value!r}")
    if value < 1 and not (field == "n_jobs" and value < 0):
        raise ImproperlyConfigured(f"{field} must be positive, got {value}")
    return value


@sk.once
def env_options() -> Options:
    """
    Options read from the PYTEACH_* environment variables.
    """
    kwargs = {}
    for field, var in ENV_VARS.items():
        if var in os.environ:
            kwargs[field] = _parse(field, os.environ[var])
    return Options(**kwargs)


def options() -> Options:
    """
    Return the current options, with values from set_options() taking
    precedence over the environment.
    """
    return env_options()._replace(**OVERRIDES)


def set_options(**kwargs):
    """
    Override configuration options for the current process.

    Examples:
        >>> set_options(nctd_max_hypotheses=20)
    """
    for field, value in kwargs.items():
        if field not in Options._fields:
            names = ", ".join(map(repr, Options._fields))
            raise ImproperlyConfigured(f"invalid option. Must be one of {names}, got {field!r}")
        OVERRIDES[field] = _parse(field, value)


def reset_options():
    """
    Discard every override set by set_options().
    """
    OVERRIDES.clear()


def resolve_cap(name, cap=None) -> int:
    """
    Return an explicit cap or the configured value of the given option.
    """
    if cap is None:
        return getattr(options(), name)
    return _parse(name, cap)


@sk.once
def user_path():
    """
    Return the user path for pyteach cache files.
    """
    path = Path("~") / ".local" / "pyteach"
    path = path.expanduser()

    if not path.exists():
        path.mkdir(parents=True, exist_ok=True)
    return path


@sk.lru_cache(32)
def memory(name) -> joblib.Memory:
    """
    Return the joblib's Memory object with the given name.
    """
    if isinstance(name, joblib.Memory):
        return name

    path = user_path() / "cache" / name
    path.mkdir(parents=True, exist_ok=True)
    return joblib.Memory(path, verbose=0)
