import numpy as np
import pytest

from pyteach.core import HypothesisClass
from pyteach.corpus import get_sigma, get_teacher_map, random_classes
from pyteach.dims import nctd
from pyteach.prefs import (
    LocalPreference,
    collusion_free_check,
    collusion_free_exhaustive,
    const,
    global_from_rtd,
    gvs_from_teacher_map,
    hamming_local,
)
from pyteach.types import CapacityError


def swap_preference():
    # each hypothesis prefers the other one
    cls = HypothesisClass([[0], [1]])
    return LocalPreference(cls, [[1, 0], [0, 1]])


class TestCollusion:
    def test_const_and_global_are_collusion_free(self, warmuth, appendix):
        assert collusion_free_check(const(warmuth))
        assert collusion_free_check(get_sigma("appendix-global"))
        assert collusion_free_check(global_from_rtd(warmuth))

    def test_collusive_local_preference(self):
        sigma = swap_preference()
        report = collusion_free_check(sigma)
        assert not report
        assert report.counterexample.example is None
        assert report.to_json()["collusion_free"] is False
        assert report.to_json()["counterexample"]["preferred"] == ["h1"]
        assert not collusion_free_exhaustive(sigma)

    def test_gvs_from_non_clashing_map(self, warmuth, appendix):
        for cls in (warmuth, appendix):
            _, T = nctd(cls)
            assert collusion_free_check(gvs_from_teacher_map(T))

    def test_gvs_from_bundled_map(self):
        sigma = gvs_from_teacher_map(get_teacher_map("warmuth-gvs"))
        assert collusion_free_check(sigma)

    def test_capacity(self, warmuth):
        with pytest.raises(CapacityError):
            collusion_free_check(const(warmuth), cap=10)

    def test_report_json(self, warmuth):
        assert collusion_free_check(const(warmuth)).to_json() == {"collusion_free": True}

    @pytest.mark.slow
    def test_stepwise_matches_exhaustive(self):
        rng = np.random.default_rng(7)
        for cls in random_classes(50, 6, 4, seed=3):
            n = cls.num_hypotheses
            for sigma in (hamming_local(cls), LocalPreference(cls, rng.integers(0, 3, (n, n)))):
                fast = collusion_free_check(sigma)
                slow = collusion_free_exhaustive(sigma)
                assert bool(fast) == bool(slow)
