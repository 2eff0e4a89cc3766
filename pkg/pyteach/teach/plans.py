from typing import List, NamedTuple, Tuple

from .cost import CostTable, UNREACHABLE
from ..core import HypothesisClass, LabeledExample
from ..prefs import PreferenceFunction
from ..types import UnreachableError
from ..utils import iter_bits


class TeachingPlan(NamedTuple):
    """
    Examples shown to the learner to reach a target, with the hypotheses the
    learner is expected to hold after each of them.

    ``trace`` starts with the initial hypothesis, so it has one more element
    than ``steps``.
    """

    target: int
    steps: Tuple[LabeledExample, ...]
    trace: Tuple[int, ...]
    cost: float
    cls: HypothesisClass

    def __len__(self):
        return len(self.steps)

    def to_json(self):
        names = self.cls.hypothesis_names
        return {
            "target": names[self.target],
            "steps": self.cls.example_names(self.steps),
            "trace": [names[h] for h in self.trace],
            "cost": self.cost,
        }


def extract_plan(
    sigma: PreferenceFunction, h0, h_star, table: CostTable = None, zero_cost_at_target=None
) -> TeachingPlan:
    """
    A plan achieving D_σ from the full class, starting at h0.

    At each state the lowest-indexed cost-minimizing instance is shown and
    the learner is assumed to move to the candidate with largest remaining
    cost (lowest index among ties).

    Raises UnreachableError if no finite plan exists.
    """
    cls = sigma.cls
    h0, h_star = cls.hypothesis(h0), cls.hypothesis(h_star)
    if table is None:
        table = CostTable(sigma, h_star, zero_cost_at_target)
    vmask, h = cls.full_mask, h0
    cost = table.cost(vmask, h)
    if cost == UNREACHABLE:
        name = cls.hypothesis_names[h_star]
        raise UnreachableError(f"{name} cannot be taught from {cls.hypothesis_names[h0]}")

    steps: List[LabeledExample] = []
    trace = [h0]
    remaining = cost
    while remaining > 0:
        move = min(
            (m for m in table.moves(vmask, h) if table.move_cost(vmask, h, m) == remaining),
            key=lambda m: m.instance,
        )
        steps.append(cls.example_for(h_star, move.instance))
        vmask = move.vmask
        if move.terminal:
            h = h_star
        else:
            h = max(iter_bits(move.candidates), key=lambda c: (table.values[vmask, c], -c))
        trace.append(h)
        remaining = table.cost(vmask, h) if not move.terminal else 0
    return TeachingPlan(h_star, tuple(steps), tuple(trace), cost, cls)
