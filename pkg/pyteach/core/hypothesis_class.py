from typing import NamedTuple, Sequence, Union

import numpy as np
import sidekick as sk

from ..types import ValidationError
from ..utils import iter_bits, mask_of

Ref = Union[int, str]


class LabeledExample(NamedTuple):
    """
    A labeled example (x, y): the unit of teaching.
    """

    instance: int
    label: bool

    def to_json(self):
        return [self.instance, int(self.label)]


class HypothesisClass:
    """
    A finite class of boolean hypotheses stored as a read-only bit matrix with
    one row per hypothesis and one column per instance.

    Args:
        rows:
            Sequence of 0/1 rows of equal length. Rows must be distinct.
        instance_names:
            Optional display names for columns. Defaults to x1, x2, ...
        hypothesis_names:
            Optional display names for rows. Defaults to h1, h2, ...
        name:
            Optional name for the class.

    Examples:
        >>> cls = HypothesisClass([[1, 0], [0, 1]])
        >>> cls.num_hypotheses, cls.num_instances
        (2, 2)
    """

    def __init__(
        self,
        rows: Sequence[Sequence[int]],
        instance_names: Sequence[str] = None,
        hypothesis_names: Sequence[str] = None,
        name: str = None,
    ):
        rows = [list(row) for row in rows]
        if not rows:
            raise ValidationError("hypothesis class must have at least one hypothesis")

        width = len(rows[0])
        if width == 0:
            raise ValidationError("hypothesis class must have at least one instance")
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValidationError(
                    f"ragged row {i + 1}: expected {width} labels, got {len(row)}"
                )
            for value in row:
                if value not in (0, 1):
                    raise ValidationError(f"invalid label in row {i + 1}: {value!r}")

        seen = {}
        for i, row in enumerate(rows):
            key = tuple(row)
            if key in seen:
                raise ValidationError(f"duplicate hypotheses: rows {seen[key] + 1} and {i + 1}")
            seen[key] = i

        matrix = np.array(rows, dtype=bool)
        matrix.setflags(write=False)
        self.matrix = matrix
        self.name = name
        self.instance_names = _names(instance_names, "x", width)
        self.hypothesis_names = _names(hypothesis_names, "h", len(rows))
        self._instance_index = {n: i for i, n in enumerate(self.instance_names)}
        self._hypothesis_index = {n: i for i, n in enumerate(self.hypothesis_names)}

        # label_masks[x][y] is the bitmask of hypotheses with h(x) == y
        self.label_masks = tuple(
            (
                mask_of(np.flatnonzero(~matrix[:, x]).tolist()),
                mask_of(np.flatnonzero(matrix[:, x]).tolist()),
            )
            for x in range(width)
        )
        self.full_mask = (1 << len(rows)) - 1

    def __repr__(self):
        name = f"{self.name!r}, " if self.name else ""
        return f"HypothesisClass({name}{self.num_hypotheses}x{self.num_instances})"

    def __len__(self):
        return self.num_hypotheses

    @property
    def num_hypotheses(self) -> int:
        return self.matrix.shape[0]

    @property
    def num_instances(self) -> int:
        return self.matrix.shape[1]

    @property
    def rows(self):
        """
        Rows as tuples of 0/1 ints.
        """
        return [tuple(int(v) for v in row) for row in self.matrix]

    @sk.lazy
    def full(self):
        """
        Version space with every hypothesis of the class.
        """
        from .version_space import VersionSpace

        return VersionSpace(self, self.full_mask)

    #
    # Index resolution
    #
    def hypothesis(self, ref: Ref) -> int:
        """
        Resolve a hypothesis name or index into a validated index.
        """
        return _resolve(ref, self._hypothesis_index, self.num_hypotheses, "hypothesis")

    def instance(self, ref: Ref) -> int:
        """
        Resolve an instance name or index into a validated index.
        """
        return _resolve(ref, self._instance_index, self.num_instances, "instance")

    def example(self, instance: Ref, label) -> LabeledExample:
        """
        Build a validated labeled example.
        """
        if label not in (0, 1):
            raise ValidationError(f"invalid label: {label!r}")
        return LabeledExample(self.instance(instance), bool(label))

    def label(self, h: int, x: int) -> bool:
        """
        Label h(x).
        """
        return bool(self.matrix[self.hypothesis(h), self.instance(x)])

    def example_for(self, h: int, x: int) -> LabeledExample:
        """
        The example (x, h(x)) consistent with h.
        """
        return LabeledExample(x, self.label(h, x))

    def consistent_mask(self, z: LabeledExample) -> int:
        """
        Bitmask of hypotheses consistent with z.
        """
        x = self.instance(z.instance)
        return self.label_masks[x][int(bool(z.label))]

    def names_of(self, mask: int):
        """
        Hypothesis names for the members of a bitmask.
        """
        return [self.hypothesis_names[i] for i in iter_bits(mask)]

    def example_names(self, examples):
        """
        Render examples as [instance name, label] pairs.
        """
        return [[self.instance_names[z.instance], int(z.label)] for z in examples]

    def to_json(self):
        return {
            "instances": list(self.instance_names),
            "hypotheses": [
                {"name": name, "labels": list(row)}
                for name, row in zip(self.hypothesis_names, self.rows)
            ],
        }


def _names(names, prefix, size):
    if names is None:
        return tuple(f"{prefix}{i + 1}" for i in range(size))
    names = tuple(map(str, names))
    if len(names) != size:
        raise ValidationError(f"expected {size} names, got {len(names)}")
    if len(set(names)) != size:
        raise ValidationError(f"names must be unique: {names}")
    return names


def _resolve(ref, index, size, kind):
    if isinstance(ref, (bool, np.bool_)):
        raise ValidationError(f"invalid {kind}: {ref!r}")
    if isinstance(ref, (int, np.integer)):
        if 0 <= ref < size:
            return int(ref)
        raise ValidationError(f"{kind} index out of range: {ref}")
    try:
        return index[ref]
    except (KeyError, TypeError):
        names = ", ".join(map(repr, index))
        raise ValidationError(f"invalid {kind}. Must be one of {names}, got {ref!r}")
