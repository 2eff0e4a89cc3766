from typing import List, NamedTuple, Optional, Tuple

from ..core import VersionSpace, as_version_space
from ..dims import is_compact
from ..logging import log
from ..types import ConstructionError, ValidationError
from ..utils import iter_bits


class Block(NamedTuple):
    """
    One block of a partition.

    ``pivot`` and ``label`` are None for the final block, which holds only
    the reference hypothesis. ``instances`` are the instances still
    available to the block once its pivot is removed.
    """

    members: VersionSpace
    pivot: Optional[int]
    label: Optional[bool]
    instances: Tuple[int, ...]

    def to_json(self):
        cls = self.members.cls
        pivot = None if self.pivot is None else cls.instance_names[self.pivot]
        label = None if self.label is None else int(self.label)
        return {"members": self.members.names, "pivot": pivot, "label": label}


class Partition(NamedTuple):
    blocks: List[Block]
    reference: int
    compact_set: Tuple[int, ...]

    def __len__(self):
        return len(self.blocks)

    def to_json(self):
        cls = self.blocks[0].members.cls
        return {
            "reference": cls.hypothesis_names[self.reference],
            "compact_set": [cls.instance_names[x] for x in self.compact_set],
            "blocks": [b.to_json() for b in self.blocks],
        }


def _patterns(cls, mask, X):
    sub = cls.matrix[list(iter_bits(mask))][:, list(X)]
    return {tuple(int(v) for v in row) for row in sub}


def partition_class(H: VersionSpace, compact_set, h_ref) -> Partition:
    """
    Split H into blocks with decreasing VC dimension around a reference
    hypothesis.

    Pivots x are taken from the compact-distinguishable set in ascending
    order. Each block collects the remaining hypotheses labeling x with
    1 - h_ref(x) whose pattern with x flipped is still realized by the
    remaining hypotheses on the remaining instances. The block and x are then
    removed. The last block is {h_ref}.

    Examples:
        >>> cls = warmuth_class()
        >>> [b.members.names for b in partition_class(cls.full, range(5), "h1").blocks][:2]
        [['h3'], ['h4', 'h10']]
    """
    H = as_version_space(H)
    cls = H.cls
    h_ref = cls.hypothesis(h_ref)
    if h_ref not in H:
        raise ValidationError(f"{cls.hypothesis_names[h_ref]} is not in the version space")
    X = tuple(sorted({cls.instance(x) for x in compact_set}))
    if not is_compact(X, H):
        raise ValidationError("instance set is not compact-distinguishable on the version space")

    rest_mask = H.mask
    rest_instances = list(X)
    ref_row = cls.matrix[h_ref]
    blocks = []
    for x in X:
        y = 1 - int(ref_row[x])
        patterns = _patterns(cls, rest_mask, rest_instances)
        pos = rest_instances.index(x)
        block = 0
        for h in iter_bits(rest_mask & cls.label_masks[x][y]):
            flipped = [int(v) for v in cls.matrix[h, rest_instances]]
            flipped[pos] = 1 - flipped[pos]
            if tuple(flipped) in patterns:
                block |= 1 << h
        rest_mask &= ~block
        rest_instances.remove(x)
        if block:
            blocks.append(Block(VersionSpace(cls, block), x, bool(y), tuple(rest_instances)))
        else:
            log.debug(f"partition: empty block at pivot {cls.instance_names[x]}")

    if rest_mask != 1 << h_ref:
        names = cls.names_of(rest_mask)
        raise ConstructionError(f"partition did not end with the reference hypothesis: {names}")
    blocks.append(Block(VersionSpace(cls, rest_mask), None, None, ()))
    return Partition(blocks, h_ref, X)
