import pytest

from pyteach.construct import build_sigma_local_powerset, min_depth
from pyteach.construct.powerset import Tree
from pyteach.dims import sigma_td_lower_bound
from pyteach.teach import simulate, td_sigma
from pyteach.types import ConstructionError, ValidationError


class TestMinDepth:
    def test_small_domains(self):
        assert min_depth(2) == 2
        assert min_depth(3) == 2
        assert min_depth(7) == 3

    def test_capacity_threshold(self):
        assert [min_depth(k) for k in range(2, 9)] == [2, 2, 2, 3, 3, 3, 3]


class TestTree:
    def test_ordered_children(self):
        tree = Tree(3)
        tree.add_ordered(tree.root, [0b110, 0b001, 0b100])
        tree.check()
        assert len(tree.root.children) == 3

    def test_cyclic_overlap_has_no_order(self):
        tree = Tree(3)
        with pytest.raises(ConstructionError):
            tree.add_ordered(tree.root, [0b110, 0b011, 0b101])


class TestLocalPowerset:
    @pytest.mark.parametrize("k", [2, 3])
    def test_depth_two(self, k):
        construction = build_sigma_local_powerset(k)
        assert construction.strategy == "search"
        assert construction.depth == 2
        assert td_sigma(construction.sigma, 0) == 2

    @pytest.mark.parametrize("k", range(2, 9))
    def test_depth_is_minimal(self, k):
        construction = build_sigma_local_powerset(k)
        assert construction.depth == min_depth(k)
        assert len(construction.plans) == 2 ** k
        assert max(len(plan) for plan in construction.plans.values()) == min_depth(k)

    def test_four_instances(self):
        construction = build_sigma_local_powerset(4)
        assert construction.strategy == "table"
        assert construction.depth == 2
        assert td_sigma(construction.sigma, 0) == 2

    @pytest.mark.slow
    def test_rotated_design_replays(self):
        construction = build_sigma_local_powerset(8)
        assert construction.strategy == "rotated"
        for h, plan in construction.plans.items():
            trace = simulate(construction.sigma, 0, plan.steps, tie="adversarial", target=h)
            assert trace.final == h
            assert trace.hypotheses == list(plan.trace)

    def test_respects_counting_bound(self):
        for k in (2, 3):
            construction = build_sigma_local_powerset(k)
            assert td_sigma(construction.sigma, 0) >= sigma_td_lower_bound(k)

    def test_plans_replay(self):
        construction = build_sigma_local_powerset(3)
        for h, plan in construction.plans.items():
            trace = simulate(construction.sigma, 0, plan.steps, tie="adversarial", target=h)
            assert trace.final == h
            assert trace.hypotheses == list(plan.trace)
            assert len(plan) <= construction.depth

    def test_root_is_parentless(self):
        construction = build_sigma_local_powerset(2, "11")
        cls = construction.cls
        root = cls.hypothesis("11")
        assert construction.parents[root] is None
        assert sum(p is None for p in construction.parents.values()) == 1
        assert all(plan.trace[0] == root for plan in construction.plans.values())
        assert td_sigma(construction.sigma, root) == 2

    def test_json(self):
        data = build_sigma_local_powerset(2).to_json()
        assert data["depth"] == 2
        assert data["parents"]["00"] is None
        assert sorted(data["plans"]) == ["00", "01", "10", "11"]

    @pytest.mark.parametrize("k", [1, 9])
    def test_invalid_size(self, k):
        with pytest.raises(ValidationError):
            build_sigma_local_powerset(k)

    @pytest.mark.slow
    def test_cyclic_design(self):
        construction = build_sigma_local_powerset(7)
        assert construction.strategy == "cyclic"
        assert construction.depth == 3
        assert len(construction.plans) == 128
        assert td_sigma(construction.sigma, 0) == 3

        cls = construction.cls
        names = cls.hypothesis_names

        def plan(name):
            return construction.plans[cls.hypothesis(name)]

        assert [names[h] for h in plan("1000000").trace] == ["0000000", "1000000"]
        assert plan("1000000").steps == ((0, True),)
        assert [names[h] for h in plan("1100000").trace] == ["0000000", "1000000", "1100000"]
        assert plan("1100000").steps == ((0, True), (1, True))
        assert [names[h] for h in plan("1110000").trace] == [
            "0000000",
            "1000000",
            "1100000",
            "1110000",
        ]
        assert construction.parents[cls.hypothesis("1110000")] == cls.hypothesis("1100000")
