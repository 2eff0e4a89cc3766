import math
from collections import defaultdict, deque
from typing import Dict, List, Tuple

from joblib import Parallel, delayed

from ..config import options
from ..core import VersionSpace, as_version_space
from ..logging import log
from ..prefs import PreferenceFunction
from ..types import ValidationError
from ..utils import iter_bits, popcount

#: Cost of a target that no finite teaching strategy reaches.
UNREACHABLE = math.inf

State = Tuple[int, int]


class Move:
    """
    A teacher move from a state: the instance shown (labeled by the
    target), the refined version space and the learner's candidates.
    """

    __slots__ = ("instance", "vmask", "candidates", "terminal")

    def __init__(self, instance, vmask, candidates, terminal):
        self.instance = instance
        self.vmask = vmask
        self.candidates = candidates
        self.terminal = terminal


class CostTable:
    """
    Worst-case teaching cost D_σ(H, h, h*) for a fixed target h*, memoized
    on (version space, current hypothesis).

    The table is filled lazily: each query explores the states reachable
    from it and solves them bottom-up, from smaller version spaces to
    larger ones. Moves that keep the version space unchanged may form
    cycles, which are resolved by value iteration inside each version
    space.

    Args:
        sigma:
            Preference function.
        target:
            Target hypothesis.
        zero_cost_at_target:
            If True, a learner already holding the target costs nothing.
            Defaults to the ``zero_cost_at_target`` option.
    """

    def __init__(self, sigma: PreferenceFunction, target, zero_cost_at_target: bool = None):
        self.sigma = sigma
        self.cls = sigma.cls
        self.target = self.cls.hypothesis(target)
        if zero_cost_at_target is None:
            zero_cost_at_target = options().zero_cost_at_target
        self.zero_cost_at_target = zero_cost_at_target
        self.values: Dict[State, float] = {}
        self._moves: Dict[State, List[Move]] = {}
        row = self.cls.matrix[self.target]
        self._labels = [self.cls.label_masks[x][int(row[x])] for x in range(self.cls.num_instances)]

    def __getitem__(self, state: State) -> float:
        return self.cost(*state)

    def __len__(self):
        return len(self.values)

    def moves(self, vmask: int, h: int) -> List[Move]:
        """
        All teacher moves from state (vmask, h), in instance order.
        """
        try:
            return self._moves[vmask, h]
        except KeyError:
            pass

        single = 1 << self.target
        out = []
        for x, label_mask in enumerate(self._labels):
            refined = vmask & label_mask
            if not refined:
                continue
            candidates = self.sigma.preferred(refined, h)
            out.append(Move(x, refined, candidates, candidates == single))
        self._moves[vmask, h] = out
        return out

    def move_cost(self, vmask: int, h: int, move: Move) -> float:
        if move.terminal:
            return 1
        return 1 + max(self.values[move.vmask, c] for c in iter_bits(move.candidates))

    def cost(self, vmask: int, h: int) -> float:
        """
        D_σ for version space mask and current hypothesis h.
        """
        key = (vmask, h)
        if key not in self.values:
            if not vmask >> self.target & 1:
                raise ValidationError("target is not in the version space")
            self._solve(key)
        return self.values[key]

    def _explore(self, start: State):
        seen = {start}
        queue = deque([start])
        while queue:
            state = queue.popleft()
            for move in self.moves(*state):
                if move.terminal:
                    continue
                for c in iter_bits(move.candidates):
                    succ = (move.vmask, c)
                    if succ not in seen and succ not in self.values:
                        seen.add(succ)
                        queue.append(succ)
        return seen

    def _solve(self, start: State):
        groups = defaultdict(list)
        for state in self._explore(start):
            groups[state[0]].append(state)

        for vmask in sorted(groups, key=lambda m: (popcount(m), m)):
            states = sorted(groups[vmask], key=lambda s: s[1])
            for state in states:
                self.values[state] = self._base(state)

            rounds = 0
            changed = True
            while changed:
                changed = False
                rounds += 1
                for state in states:
                    if self.zero_cost_at_target and state[1] == self.target:
                        continue
                    costs = (self.move_cost(*state, m) for m in self.moves(*state))
                    best = min(costs, default=UNREACHABLE)
                    if best < self.values[state]:
                        self.values[state] = best
                        changed = True
            if rounds > 2:
                log.debug(f"cost table: {len(states)} states settled after {rounds} rounds")

    def _base(self, state):
        if self.zero_cost_at_target and state[1] == self.target:
            return 0
        return UNREACHABLE


def _check_members(H: VersionSpace, *hs):
    out = []
    for h in hs:
        idx = H.cls.hypothesis(h)
        if idx not in H:
            name = H.cls.hypothesis_names[idx]
            raise ValidationError(f"{name} is not in the version space")
        out.append(idx)
    return out


def d_sigma(sigma: PreferenceFunction, H: VersionSpace, h, h_star, zero_cost_at_target=None):
    """
    Worst-case number of examples needed to steer a learner holding h in
    version space H to the target h_star.

    Returns UNREACHABLE if no finite strategy exists.

    Examples:
        >>> cls = appendix_class()
        >>> d_sigma(const(cls), cls.full, "h1", "h6")
        2
    """
    H = as_version_space(H, sigma.cls)
    h, h_star = _check_members(H, h, h_star)
    table = CostTable(sigma, h_star, zero_cost_at_target)
    return table.cost(H.mask, h)


def _target_cost(sigma, h0, target, zero_cost_at_target):
    return CostTable(sigma, target, zero_cost_at_target).cost(sigma.cls.full_mask, h0)


def target_costs(sigma: PreferenceFunction, h0, n_jobs=None, zero_cost_at_target=None) -> dict:
    """
    Map each target hypothesis to its D_σ cost from the full class with
    the learner starting at h0.
    """
    cls = sigma.cls
    h0 = cls.hypothesis(h0)
    if n_jobs is None:
        n_jobs = options().n_jobs
    targets = range(cls.num_hypotheses)
    if n_jobs == 1:
        costs = [_target_cost(sigma, h0, t, zero_cost_at_target) for t in targets]
    else:
        costs = Parallel(n_jobs=n_jobs)(
            delayed(_target_cost)(sigma, h0, t, zero_cost_at_target) for t in targets
        )
    return dict(zip(targets, costs))


def td_sigma(sigma: PreferenceFunction, h0, n_jobs=None, zero_cost_at_target=None):
    """
    Teaching complexity of σ from h0: worst D_σ over every target.

    Args:
        sigma:
            Preference function.
        h0:
            Initial hypothesis of the learner.
        n_jobs:
            Number of joblib workers evaluating targets. Defaults to the
            ``n_jobs`` option.
    """
    return max(target_costs(sigma, h0, n_jobs, zero_cost_at_target).values())


def d_sigma_naive(sigma: PreferenceFunction, H: VersionSpace, h, h_star, zero_cost_at_target=None):
    """
    Plain game-tree evaluation of D_σ without memoization. Revisiting a
    state on the current path counts as unreachable.

    Exponential; meant as an oracle for tiny classes.
    """
    H = as_version_space(H, sigma.cls)
    h, t = _check_members(H, h, h_star)
    cls = sigma.cls
    if zero_cost_at_target is None:
        zero_cost_at_target = options().zero_cost_at_target
    row = cls.matrix[t]
    single = 1 << t

    def value(vmask, h, path):
        if zero_cost_at_target and h == t:
            return 0
        state = (vmask, h)
        if state in path:
            return UNREACHABLE
        path = path | {state}
        best = UNREACHABLE
        for x in range(cls.num_instances):
            refined = vmask & cls.label_masks[x][int(row[x])]
            candidates = sigma.preferred(refined, h)
            if candidates == single:
                return 1
            worst = max(value(refined, c, path) for c in iter_bits(candidates))
            best = min(best, 1 + worst)
        return best

    return value(H.mask, h, frozenset())
