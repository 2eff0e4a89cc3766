"""
Readers and writers for hypothesis classes in CSV and JSON formats.

CSV files have a header row with instance names and one row per hypothesis,
optionally prefixed by the hypothesis name::

    ,x1,x2,x3
    h1,1,0,0
    h2,0,1,1

JSON files use the layout ``{"instances": [...], "hypotheses": [{"name": ..., "labels": [...]}]}``.
"""
import io
import json
from pathlib import Path

import pandas as pd

from .hypothesis_class import HypothesisClass
from ..types import ValidationError

LABELS = ("0", "1")


def read_class(path, name=None) -> HypothesisClass:
    """
    Read a hypothesis class from a .csv or .json file.
    """
    path = Path(path)
    ext = path.suffix.lower()
    if ext == ".csv":
        return read_csv(path, name=name)
    elif ext == ".json":
        return read_json(path, name=name)
    raise ValidationError(f"invalid class file. Must be one of '.csv', '.json', got {ext!r}")


def read_csv(path_or_buffer, name=None) -> HypothesisClass:
    """
    Read a hypothesis class from CSV.

    The header may or may not include a leading field for the name column.
    Rows without names receive the default names h1, h2, ...
    """
    text = _read_text(path_or_buffer)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValidationError("CSV class must have a header and at least one hypothesis row")

    header = [f.strip() for f in lines[0].split(",")]
    widths = [ln.count(",") + 1 for ln in lines[1:]]
    for i, width in enumerate(widths):
        if width != widths[0]:
            raise ValidationError(
                f"ragged row {i + 1}: expected {widths[0]} fields, got {width}"
            )

    first = lines[1].split(",")[0].strip()
    width = widths[0]
    if width == len(header) + 1:
        named, instances = True, header
    elif width == len(header):
        named = first not in LABELS
        instances = header[1:] if named else header
    else:
        raise ValidationError(f"header has {len(header)} fields but rows have {width}")

    data = pd.read_csv(
        io.StringIO("\n".join(lines[1:])), header=None, dtype=str, skipinitialspace=True
    )
    if named:
        names = list(data.iloc[:, 0].str.strip())
        data = data.iloc[:, 1:]
    else:
        names = None

    rows = []
    for i, (_, row) in enumerate(data.iterrows()):
        values = []
        for value in row:
            value = str(value).strip()
            if value not in LABELS:
                raise ValidationError(f"invalid label in row {i + 1}: {value!r}")
            values.append(int(value))
        rows.append(values)
    return HypothesisClass(rows, instance_names=instances, hypothesis_names=names, name=name)


def read_json(path_or_buffer, name=None) -> HypothesisClass:
    """
    Read a hypothesis class from JSON.
    """
    try:
        data = json.loads(_read_text(path_or_buffer))
        instances = data.get("instances")
        hypotheses = data["hypotheses"]
        rows = [h["labels"] for h in hypotheses]
        names = [h.get("name") for h in hypotheses]
    except (ValueError, KeyError, TypeError, AttributeError) as ex:
        raise ValidationError(f"malformed JSON class: {ex}")
    if any(n is None for n in names):
        names = None
    return HypothesisClass(rows, instance_names=instances, hypothesis_names=names, name=name)


def class_from_json(data, name=None) -> HypothesisClass:
    """
    Build a class from already decoded JSON data.
    """
    return read_json(io.StringIO(json.dumps(data)), name=name)


def to_frame(cls: HypothesisClass) -> pd.DataFrame:
    """
    Class as a 0/1 data frame indexed by hypothesis name.
    """
    return pd.DataFrame(
        cls.matrix.astype(int), index=cls.hypothesis_names, columns=cls.instance_names
    )


def write_csv(cls: HypothesisClass, path_or_buffer=None):
    """
    Write class as CSV. Return the CSV string if no destination is given.
    """
    return to_frame(cls).to_csv(path_or_buffer)


def write_json(cls: HypothesisClass, path_or_buffer=None):
    """
    Write class as JSON. Return the JSON string if no destination is given.
    """
    text = json.dumps(cls.to_json(), indent=2)
    if path_or_buffer is None:
        return text
    if hasattr(path_or_buffer, "write"):
        path_or_buffer.write(text)
    else:
        Path(path_or_buffer).write_text(text)


def _read_text(path_or_buffer) -> str:
    if hasattr(path_or_buffer, "read"):
        return path_or_buffer.read()
    try:
        return Path(path_or_buffer).read_text()
    except OSError as ex:
        raise ValidationError(f"could not read {path_or_buffer}: {ex}")
