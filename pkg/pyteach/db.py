import os
from pathlib import Path

from .types import ValidationError

DATABASES = Path(__file__).absolute().parent / "databases"
EXTENSIONS = (".csv", ".json")


def database_path(ref: str) -> Path:
    """
    Return the path of a bundled data file.

    The reference is a slash separated path relative to the databases
    directory, without extension.

    Examples:
        >>> database_path("classes/warmuth").name
        'warmuth.csv'
    """
    *dirs, name = ref.split("/")
    basedir = DATABASES
    for directory in dirs:
        basedir = basedir / directory

    if basedir.is_dir():
        paths = {f[len(name) :]: basedir / f for f in os.listdir(basedir) if f.startswith(name)}
        for ext in EXTENSIONS:
            if ext in paths:
                return paths[ext]
    raise ValidationError(f"no data source found for {ref!r}")


def read_class(ref: str):
    """
    Read a hypothesis class from the bundled databases.
    """
    from .core import read_class

    *_, name = ref.split("/")
    return read_class(database_path(ref), name=name)
