"""
Replay of the sequential teaching protocol: the teacher shows one example
at a time and the learner moves to a most preferred hypothesis of the
refined version space.
"""
from typing import List, NamedTuple, Optional, Sequence

from .cost import CostTable
from ..core import VersionSpace
from ..prefs import PreferenceFunction
from ..types import ValidationError
from ..utils import iter_bits

TIE_MODES = ("lex", "adversarial")


class Trace(NamedTuple):
    """
    Hypotheses held and version spaces seen by the learner.

    ``hypotheses[0]`` and ``version_spaces[0]`` are the initial state. If an
    example empties the version space, ``halted_at`` is its position in the
    example stream and no later example is processed.
    """

    hypotheses: List[int]
    version_spaces: List[VersionSpace]
    halted_at: Optional[int] = None

    @property
    def final(self) -> int:
        return self.hypotheses[-1]

    @property
    def halted(self) -> bool:
        return self.halted_at is not None

    def to_json(self):
        cls = self.version_spaces[0].cls
        return {
            "trace": [cls.hypothesis_names[h] for h in self.hypotheses],
            "version_spaces": [V.names for V in self.version_spaces],
            "halted_at": self.halted_at,
        }


def simulate(
    sigma: PreferenceFunction,
    h0,
    steps: Sequence,
    tie: str = "lex",
    target=None,
    zero_cost_at_target=None,
) -> Trace:
    """
    Replay a stream of examples against the learner defined by σ.

    Args:
        sigma:
            Preference function.
        h0:
            Initial hypothesis.
        steps:
            Sequence of LabeledExample or (instance, label) pairs.
        tie:
            How to choose among equally preferred candidates. "lex" picks the
            lowest index. "adversarial" picks the candidate with the largest
            remaining cost toward ``target``.
        target:
            Target hypothesis, required by the adversarial mode.
    """
    cls = sigma.cls
    if tie not in TIE_MODES:
        names = ", ".join(map(repr, TIE_MODES))
        raise ValidationError(f"invalid tie mode. Must be one of {names}, got {tie!r}")
    table = None
    if tie == "adversarial":
        if target is None:
            raise ValidationError("adversarial tie mode requires a target")
        table = CostTable(sigma, target, zero_cost_at_target)

    h = cls.hypothesis(h0)
    V = cls.full
    hypotheses, spaces = [h], [V]
    for i, (x, y) in enumerate(steps):
        V = V.restrict(cls.example(x, y))
        if not V:
            return Trace(hypotheses, spaces, halted_at=i)
        candidates = list(iter_bits(sigma.preferred(V.mask, h)))
        if table is not None and V.mask >> table.target & 1:
            h = max(candidates, key=lambda c: (table.cost(V.mask, c), -c))
        else:
            h = candidates[0]
        hypotheses.append(h)
        spaces.append(V)
    return Trace(hypotheses, spaces)
