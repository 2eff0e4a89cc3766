"""
Random hypothesis classes for property tests.
"""
from typing import Iterator

import numpy as np

from ..core import HypothesisClass
from ..types import ValidationError


def _rng(rng):
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def random_class(num_hypotheses: int, num_instances: int, rng=None) -> HypothesisClass:
    """
    Sample a class of distinct hypotheses uniformly among all subsets of
    the 2^n labelings of num_instances instances.

    Args:
        num_hypotheses:
            Number of rows. Must not exceed 2 ** num_instances.
        num_instances:
            Number of columns.
        rng:
            A numpy Generator or a seed.
    """
    if num_instances < 1 or num_hypotheses < 1:
        raise ValidationError("random classes need at least one hypothesis and one instance")
    if num_hypotheses > 2 ** num_instances:
        raise ValidationError(
            f"cannot draw {num_hypotheses} distinct hypotheses over {num_instances} instances"
        )
    rng = _rng(rng)
    codes = rng.choice(2 ** num_instances, size=num_hypotheses, replace=False)
    shifts = np.arange(num_instances - 1, -1, -1)
    rows = (codes[:, None] >> shifts) & 1
    return HypothesisClass(rows.tolist())


def random_classes(
    count: int, max_hypotheses: int, max_instances: int, seed=None, min_hypotheses: int = 2
) -> Iterator[HypothesisClass]:
    """
    Yield ``count`` random classes with a random number of instances in
    1..max_instances and of hypotheses in min_hypotheses..max_hypotheses.

    Instance counts too small to hold min_hypotheses distinct rows are
    raised to the smallest count that does.
    """
    rng = _rng(seed)
    low = max(1, int(np.ceil(np.log2(max(min_hypotheses, 1)))))
    if low > max_instances:
        raise ValidationError(
            f"{max_instances} instances cannot hold {min_hypotheses} distinct hypotheses"
        )
    for _ in range(count):
        n_x = int(rng.integers(low, max_instances + 1))
        n_h = int(rng.integers(min_hypotheses, min(max_hypotheses, 2 ** n_x) + 1))
        yield random_class(n_h, n_x, rng)
