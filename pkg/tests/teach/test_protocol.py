import pytest

from pyteach.construct import build_sigma_lvs
from pyteach.corpus import get_sigma, get_teacher_map
from pyteach.prefs import const, hamming_local
from pyteach.teach import d_sigma, extract_plan, simulate
from pyteach.types import ValidationError


class TestSimulate:
    def test_bundled_lvs(self, warmuth):
        trace = simulate(get_sigma("warmuth-lvs"), "h1", [warmuth.example("x1", 1)])
        assert trace.final == 0
        assert [V.names for V in trace.version_spaces][-1] == ["h1", "h5", "h6", "h8", "h10"]

    def test_empty_stream(self, warmuth):
        trace = simulate(const(warmuth), "h3", [])
        assert trace.hypotheses == [2]
        assert trace.to_json()["trace"] == ["h3"]

    def test_lvs_sequences_reach_targets(self, warmuth):
        sigma = get_sigma("warmuth-lvs")
        for h, steps in get_teacher_map("warmuth-lvs").items():
            assert simulate(sigma, "h1", steps).final == h

    def test_gvs_sequences_reach_targets(self, warmuth):
        sigma = get_sigma("warmuth-gvs")
        for h, steps in get_teacher_map("warmuth-gvs").items():
            assert simulate(sigma, "h1", steps).final == h

    def test_const_sequences_reach_targets(self, appendix):
        sigma = get_sigma("appendix-const")
        for h, steps in get_teacher_map("appendix-const").items():
            trace = simulate(sigma, "h1", steps)
            assert trace.version_spaces[-1].members == (h,)

    def test_contradiction_halts(self, warmuth):
        steps = [("x1", 1), ("x1", 0), ("x2", 1)]
        trace = simulate(const(warmuth), "h1", steps)
        assert trace.halted
        assert trace.halted_at == 1
        assert len(trace.hypotheses) == 2
        assert trace.to_json()["halted_at"] == 1

    def test_tie_modes(self, warmuth):
        with pytest.raises(ValidationError):
            simulate(const(warmuth), "h1", [], tie="random")
        with pytest.raises(ValidationError):
            simulate(const(warmuth), "h1", [], tie="adversarial")

    def test_lex_ties(self, warmuth):
        trace = simulate(const(warmuth), "h5", [("x1", 1)])
        assert trace.final == 0


class TestPlans:
    def test_const_plan(self, appendix):
        sigma = const(appendix)
        plan = extract_plan(sigma, "h1", "h6")
        assert plan.cost == len(plan) == 2
        assert appendix.full.restrict(*plan.steps).names == ["h6"]
        data = plan.to_json()
        assert data["target"] == "h6"
        assert data["cost"] == 2
        assert len(data["trace"]) == 3

    def test_plans_replay_under_adversarial_ties(self, warmuth, appendix):
        for name, cls in [("warmuth-gvs", warmuth), ("appendix-lvs", appendix)]:
            sigma = get_sigma(name)
            for target in range(cls.num_hypotheses):
                plan = extract_plan(sigma, 0, target)
                trace = simulate(sigma, 0, plan.steps, tie="adversarial", target=target)
                assert trace.final == target
                assert len(plan) == d_sigma(sigma, cls.full, 0, target)

    def test_hamming_plans(self, warmuth):
        sigma = hamming_local(warmuth)
        for target in range(warmuth.num_hypotheses):
            plan = extract_plan(sigma, "h1", target)
            trace = simulate(sigma, "h1", plan.steps, tie="adversarial", target=target)
            assert trace.final == target
            assert trace.hypotheses == list(plan.trace)

    def test_construction_plans(self, appendix):
        construction = build_sigma_lvs(appendix, "h1", ["x2", "x3", "x4", "x5"])
        plan = extract_plan(construction.sigma, "h1", "h2")
        assert plan.cost == 1
        assert appendix.example_names(plan.steps) == [["x2", 1]]
