"""
Local preference for the powerset class built from a teaching tree.

Each node of the tree is a hypothesis. A node ranks itself 0, its children
1..m in order and everything else m + 1. The edge to the i-th child is the
example flipping its pivot instance. A child must agree with its parent on
the pivots of every later sibling, so that the example of the i-th child
eliminates all of its higher-ranked siblings, and on every pivot along its
path from the root, so that it survives the examples shown so far.
"""
from itertools import combinations, product
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..corpus.classes import powerset_class
from ..core import HypothesisClass, LabeledExample
from ..logging import log
from ..prefs import LocalPreference
from ..teach import TeachingPlan
from ..types import ConstructionError, ValidationError

MAX_K = 8

#: Pivot offsets of the depth-2 nodes under e_j in the 7-instance cyclic design
CYCLIC_PIVOTS = (1, 2, 4, 3, 5, 6)

#: Supports of the same nodes, as offsets from j
CYCLIC_SUPPORTS = (
    (0, 1),
    (0, 2),
    (0, 4),
    (0, 1, 2, 3, 4),
    (0, 2, 3, 4, 5),
    (0, 2, 3, 4, 5, 6),
)

#: Depth-2 nodes of the 4-instance tree under each e_j, as (pivot, support)
TABLE4 = (
    ((1, (0, 1)), (2, (0, 2)), (3, (0, 1, 3))),
    ((2, (1, 2)), (3, (1, 3)), (0, (0, 1, 2))),
    ((3, (2, 3)), (0, (0, 2, 3)), (1, (1, 2, 3))),
    ((0, (0, 3)), (2, (0, 1, 2, 3))),
)

#: Depth-2 nodes under e_j in the 8-instance rotated design, as
#: (pivot offset, support offsets). Node i pins {j, j + pivot}.
ROTATED8_NODES = (
    (1, (0, 1)),
    (2, (0, 2)),
    (3, (0, 3)),
    (4, (0, 1, 4)),
    (5, (0, 2, 5)),
    (6, (0, 1, 6)),
    (7, (0, 2, 7)),
)

#: Leaves of the same design as (node, support offsets, rotations). Rotation
#: j places the leaf under node i of e_j. Each entry is one rotation class of
#: the hypotheses not already placed at depth 2 or less.
ROTATED8_LEAVES = (
    (0, (0, 1, 2), 8),
    (0, (0, 1, 2, 3), 8),
    (0, (0, 1, 2, 3, 4, 5, 6), 8),
    (0, (0, 1, 2, 3, 4, 5, 6, 7), 1),
    (1, (0, 2, 4), 8),
    (1, (0, 1, 2, 4), 8),
    (1, (0, 1, 2, 6), 8),
    (1, (0, 1, 2, 5), 8),
    (1, (0, 2, 3, 4, 5), 8),
    (2, (0, 3, 4), 8),
    (2, (0, 1, 3, 4), 8),
    (2, (0, 1, 3, 5), 8),
    (2, (0, 1, 3, 6), 8),
    (2, (0, 2, 3, 4, 7), 8),
    (3, (0, 4), 4),
    (3, (0, 1, 4, 5), 4),
    (3, (0, 2, 3, 4, 6, 7), 4),
    (3, (0, 2, 4, 6), 2),
    (4, (0, 2, 4, 5), 8),
    (4, (0, 3, 4, 5, 7), 8),
    (4, (0, 2, 3, 5, 6, 7), 8),
    (5, (0, 3, 4, 5, 6), 8),
    (5, (0, 1, 3, 4, 6), 8),
    (5, (0, 1, 3, 5, 6, 7), 8),
    (6, (0, 1, 2, 3, 7), 8),
    (6, (0, 1, 3, 5, 7), 8),
    (6, (0, 3, 4, 5, 6, 7), 8),
)


class Node:
    """
    A node of the teaching tree over bit vectors of a k-instance domain.
    """

    __slots__ = ("vec", "parent", "pivot", "depth", "pinned", "children")

    def __init__(self, vec, parent=None, pivot=None):
        self.vec = vec
        self.parent = parent
        self.pivot = pivot
        self.depth = 0 if parent is None else parent.depth + 1
        self.pinned = frozenset() if parent is None else parent.pinned | {pivot}
        self.children: List["Node"] = []

    def add(self, vec, pivot) -> "Node":
        child = Node(vec, self, pivot)
        self.children.append(child)
        return child

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


class Tree:
    def __init__(self, k):
        self.k = k
        self.root = Node(0)
        self.nodes: Dict[int, Node] = {0: self.root}

    def bit(self, j) -> int:
        return 1 << (self.k - 1 - j)

    def free(self, node: Node):
        return [j for j in range(self.k) if j not in node.pinned]

    def add(self, parent: Node, vec, pivot) -> Node:
        if vec in self.nodes:
            raise ConstructionError(f"node {vec:0{self.k}b} placed twice")
        node = parent.add(vec, pivot)
        self.nodes[vec] = node
        return node

    def vec(self, support, shift=0) -> int:
        out = 0
        for j in support:
            out |= self.bit((j + shift) % self.k)
        return out

    def add_ordered(self, parent: Node, vecs):
        """
        Add vecs as children of parent, choosing each pivot among the
        instances no later child flips.
        """
        diffs = {
            vec: {j for j in self.free(parent) if (vec ^ parent.vec) & self.bit(j)} for vec in vecs
        }
        order = []
        while diffs:
            for j in self.free(parent):
                owners = [vec for vec, diff in diffs.items() if j in diff]
                if len(owners) == 1:
                    order.append((owners[0], j))
                    del diffs[owners[0]]
                    break
            else:
                raise ConstructionError(f"no pivot order for children of {parent.vec:0{self.k}b}")
        for vec, pivot in reversed(order):
            self.add(parent, vec, pivot)

    def add_leaves(self, parents):
        for node in parents:
            for j in self.free(node):
                vec = node.vec ^ self.bit(j)
                if vec not in self.nodes:
                    self.add(node, vec, j)

    @property
    def depth(self) -> int:
        return max(node.depth for node in self.nodes.values())

    def covers(self) -> bool:
        return len(self.nodes) == 2 ** self.k

    def check(self):
        """
        Verify the sibling and path agreement rules.
        """
        for node in self.root.walk():
            for i, child in enumerate(node.children):
                diff = child.vec ^ node.vec
                if not diff & self.bit(child.pivot):
                    raise ConstructionError("child does not flip its pivot")
                for later in node.children[i + 1 :]:
                    if diff & self.bit(later.pivot):
                        raise ConstructionError("child disagrees with a later sibling pivot")
                for j in node.pinned:
                    if diff & self.bit(j):
                        raise ConstructionError("child disagrees with a pinned instance")


class PowersetConstruction(NamedTuple):
    sigma: LocalPreference
    plans: Dict[int, TeachingPlan]
    depth: int
    strategy: str
    parents: Dict[int, Optional[int]]

    @property
    def cls(self) -> HypothesisClass:
        return self.sigma.cls

    def to_json(self):
        names = self.cls.hypothesis_names
        return {
            "depth": self.depth,
            "strategy": self.strategy,
            "plans": {names[h]: p.to_json() for h, p in self.plans.items()},
            "parents": {names[h]: None if p is None else names[p] for h, p in self.parents.items()},
        }


def min_depth(k: int) -> int:
    """
    Smallest depth D such that a tree with branching k, k - 1, ... at
    successive levels has at least 2^k nodes up to depth D.

    Examples:
        >>> min_depth(7)
        3
    """
    total, width, depth = 1, 1, 0
    while total < 2 ** k:
        width *= k - depth
        total += width
        depth += 1
    return depth


#
# Strategies
#
def _depth2_search(k) -> Optional[Tree]:
    # Root slots in ascending pivot order. Each slot is skipped or flips its
    # pivot together with a subset of smaller instances.
    slots = []
    for p in range(k):
        options = [(p, T) for size in range(p + 1) for T in combinations(range(p), size)]
        slots.append(options + [None])

    for choice in product(*slots):
        tree = Tree(k)
        try:
            for option in choice:
                if option is None:
                    continue
                p, T = option
                vec = tree.bit(p)
                for q in T:
                    vec |= tree.bit(q)
                tree.add(tree.root, vec, p)
        except ConstructionError:
            continue
        tree.add_leaves(list(tree.root.children))
        if tree.covers():
            return tree
    return None


def _table4() -> Tree:
    tree = Tree(4)
    for j, row in enumerate(TABLE4):
        node = tree.add(tree.root, tree.bit(j), j)
        for pivot, support in row:
            tree.add(node, tree.vec(support), pivot)
    return tree


def _cyclic7() -> Tree:
    k = 7
    tree = Tree(k)
    level1 = [tree.add(tree.root, tree.bit(j), j) for j in range(k)]
    level2 = []
    for j, node in enumerate(level1):
        for pivot, support in zip(CYCLIC_PIVOTS, CYCLIC_SUPPORTS):
            level2.append(tree.add(node, tree.vec(support, j), (j + pivot) % k))
    tree.add_leaves(level2)
    return tree


def _rotated8() -> Tree:
    k = 8
    tree = Tree(k)
    level2 = {}
    for j in range(k):
        node = tree.add(tree.root, tree.bit(j), j)
        for i, (pivot, support) in enumerate(ROTATED8_NODES):
            level2[i, j] = tree.add(node, tree.vec(support, j), (j + pivot) % k)

    leaves: Dict[Tuple[int, int], List[int]] = {key: [] for key in level2}
    for i, support, rotations in ROTATED8_LEAVES:
        for j in range(rotations):
            leaves[i, j].append(tree.vec(support, j))
    for key, vecs in leaves.items():
        tree.add_ordered(level2[key], vecs)
    return tree


def _greedy(k, depth) -> Tree:
    tree = Tree(k)
    frontier = [tree.root]
    for _ in range(depth - 2):
        new = []
        for node in frontier:
            for j in tree.free(node):
                vec = node.vec ^ tree.bit(j)
                if vec not in tree.nodes:
                    new.append(tree.add(node, vec, j))
        frontier = new

    claimed = set()

    def uncovered(vec):
        return vec not in tree.nodes and vec not in claimed

    last = []
    for node in frontier:
        free = tree.free(node)
        for p in free:
            earlier = [q for q in free if q < p]
            best, best_score = None, 0
            for size in range(len(earlier) + 1):
                for T in combinations(earlier, size):
                    vec = node.vec ^ tree.bit(p)
                    for q in T:
                        vec ^= tree.bit(q)
                    if not uncovered(vec):
                        continue
                    pinned = node.pinned | {p}
                    score = 1 + sum(
                        uncovered(vec ^ tree.bit(j)) for j in range(k) if j not in pinned
                    )
                    if score > best_score:
                        best, best_score = vec, score
            if best is None:
                continue
            child = tree.add(node, best, p)
            last.append(child)
            for j in tree.free(child):
                claimed.add(best ^ tree.bit(j))
    tree.add_leaves(last)
    return tree


def _build_tree(k) -> Tuple[Tree, str]:
    depth = min_depth(k)
    if k == 4:
        tree, strategy = _table4(), "table"
    elif k == 7:
        tree, strategy = _cyclic7(), "cyclic"
    elif k == 8:
        tree, strategy = _rotated8(), "rotated"
    elif depth == 2:
        tree, strategy = _depth2_search(k), "search"
    else:
        tree, strategy = _greedy(k, depth), "greedy"

    if tree is None or not tree.covers():
        covered = 0 if tree is None else len(tree.nodes)
        raise ConstructionError(
            f"{strategy} tree of depth {depth} covers {covered} of {2 ** k} hypotheses"
        )
    if tree.depth != depth:
        raise ConstructionError(f"{strategy} tree has depth {tree.depth}, expected {depth}")
    return tree, strategy


def build_sigma_local_powerset(k: int, h0=0) -> PowersetConstruction:
    """
    Build a local preference for the powerset class over k instances whose
    teaching tree is rooted at h0, and the plan of each hypothesis.

    Args:
        k:
            Number of instances, between 2 and 8.
        h0:
            Root hypothesis, by name (bit string) or index.
    """
    if not 2 <= k <= MAX_K:
        raise ValidationError(f"k must be between 2 and {MAX_K}, got {k}")
    cls = powerset_class(k)
    h0 = cls.hypothesis(h0)

    tree, strategy = _build_tree(k)
    if not tree.covers():
        raise ConstructionError(f"teaching tree covers {len(tree.nodes)} of {2 ** k} hypotheses")
    tree.check()
    log.debug(f"powerset: k={k}, strategy {strategy}, depth {tree.depth}")

    n = cls.num_hypotheses
    table = []
    for h in range(n):
        node = tree.nodes[h ^ h0]
        m = len(node.children)
        row = [m + 1] * n
        row[h] = 0
        for i, child in enumerate(node.children):
            row[child.vec ^ h0] = i + 1
        table.append(row)
    sigma = LocalPreference(cls, table)

    plans = {}
    parents = {}
    for vec, node in tree.nodes.items():
        h = vec ^ h0
        parents[h] = None if node.parent is None else node.parent.vec ^ h0
        path = []
        cur = node
        while cur.parent is not None:
            path.append(cur)
            cur = cur.parent
        path.reverse()
        if path:
            steps = tuple(LabeledExample(p.pivot, cls.label(h, p.pivot)) for p in path)
            trace = (h0,) + tuple(p.vec ^ h0 for p in path)
        else:
            steps = (cls.example_for(h0, 0),)
            trace = (h0, h0)
        plans[h] = TeachingPlan(h, steps, trace, len(steps), cls)
    plans = dict(sorted(plans.items()))
    return PowersetConstruction(sigma, plans, tree.depth, strategy, dict(sorted(parents.items())))
