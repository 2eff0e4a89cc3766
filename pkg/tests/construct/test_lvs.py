import pytest

from pyteach.construct import build_sigma_lvs, check_unique_version_spaces
from pyteach.core import HypothesisClass
from pyteach.corpus import random_classes
from pyteach.dims import vcd
from pyteach.prefs import collusion_free_check
from pyteach.teach import simulate, td_sigma
from pyteach.types import ConstructionError, ValidationError
from pyteach.utils import mask_of


class TestLvsConstruction:
    def test_warmuth(self, warmuth):
        construction = build_sigma_lvs(warmuth, "h1")
        assert td_sigma(construction.sigma, "h1") == 2
        assert construction.cost <= vcd(warmuth) == 2
        assert collusion_free_check(construction.sigma)

    def test_plans_replay(self, warmuth):
        construction = build_sigma_lvs(warmuth, "h1")
        sigma = construction.sigma
        for h, plan in construction.plans.items():
            trace = simulate(sigma, "h1", plan.steps, tie="adversarial", target=h)
            assert trace.final == h
            assert trace.hypotheses == list(plan.trace)

    def test_appendix_ranks(self, appendix):
        construction = build_sigma_lvs(appendix, "h1", ["x2", "x3", "x4", "x5"])
        sigma = construction.sigma

        def key(members, h):
            return mask_of(appendix.hypothesis(g) for g in members), appendix.hypothesis(h)

        assert sigma.entries == {
            key(["h2", "h3", "h4", "h5"], "h1"): {1: 2},
            key(["h3", "h4", "h5"], "h1"): {2: 3},
            key(["h4", "h6"], "h1"): {3: 4, 5: 6},
            key(["h5", "h6"], "h1"): {4: 5},
            key(["h6"], "h4"): {5: 6},
        }
        assert (sigma.self_rank, sigma.other_rank) == (0, 7)

    def test_appendix_plans(self, appendix):
        construction = build_sigma_lvs(appendix, "h1", ["x2", "x3", "x4", "x5"])
        plans = {
            appendix.hypothesis_names[h]: appendix.example_names(p.steps)
            for h, p in construction.plans.items()
        }
        assert plans == {
            "h1": [["x2", 0]],
            "h2": [["x2", 1]],
            "h3": [["x3", 1]],
            "h4": [["x4", 1]],
            "h5": [["x5", 1]],
            "h6": [["x4", 1], ["x5", 1]],
        }
        assert td_sigma(construction.sigma, "h1") == 2
        assert construction.index == {h: h + 1 for h in range(6)}

    def test_trace_json(self, appendix):
        construction = build_sigma_lvs(appendix, "h1", ["x2", "x3", "x4", "x5"])
        data = construction.to_json(trace=True)
        assert data["degenerate"] is False
        deeper = [r for r in data["trace"] if r["depth"] == 1]
        assert deeper == [{
            "depth": 1,
            "current": "h4",
            "block": ["h6"],
            "pivot": ["x5", 1],
            "version_space": ["h6"],
            "next": "h6",
        }]
        assert len(data["trace"]) == 5
        assert "trace" not in construction.to_json()

    def test_singleton_class(self):
        cls = HypothesisClass([[1, 0]])
        construction = build_sigma_lvs(cls, 0)
        assert construction.degenerate
        assert len(construction.plans[0]) == 1
        assert td_sigma(construction.sigma, 0) == 1

    def test_invalid_compact_set(self, appendix):
        with pytest.raises(ValidationError):
            build_sigma_lvs(appendix, "h1", ["x1", "x2", "x3", "x4", "x5", "x6"])

    def test_unique_version_spaces(self):
        cls = HypothesisClass([[0, 0], [0, 1], [1, 0], [1, 1]])
        check_unique_version_spaces(cls.full, (0, 1))
        twins = HypothesisClass([[0, 0], [1, 1]])
        with pytest.raises(ConstructionError):
            check_unique_version_spaces(twins.full, (0, 1))

    @pytest.mark.slow
    def test_random_classes(self):
        for cls in random_classes(200, 10, 6, seed=31):
            construction = build_sigma_lvs(cls, 0)
            assert td_sigma(construction.sigma, 0) <= vcd(cls)
            assert collusion_free_check(construction.sigma)
