import math

import pytest

from pyteach.core import HypothesisClass
from pyteach.corpus import get_teacher_map, powerset_class
from pyteach.dims import TeacherMap, find_clash, informative_instances, is_non_clashing, nctd
from pyteach.types import CapacityError, ValidationError


class TestTeacherMap:
    def test_validation(self, warmuth):
        T = TeacherMap(warmuth, {"h1": [("x1", 1), ("x2", 1)]})
        assert T.size == 2
        assert T.to_json() == {"h1": [["x1", 1], ["x2", 1]]}
        assert warmuth.names_of(T.consistent_mask("h1")) == ["h1", "h6"]

        with pytest.raises(ValidationError):
            TeacherMap(warmuth, {"h1": [("x1", 0)]})
        with pytest.raises(ValidationError):
            TeacherMap(warmuth, {"h1": [("x1", 1), ("x1", 1)]})

    def test_from_json(self, warmuth):
        T = TeacherMap.from_json({"h2": [["x2", 1]]}, warmuth)
        assert T["h2"] == (warmuth.example("x2", 1),)


class TestClash:
    def test_empty_sets_clash(self):
        cls = HypothesisClass([[0], [1]])
        T = TeacherMap(cls, {0: [], 1: []})
        assert find_clash(T) == (0, 1)
        assert not is_non_clashing(T)

    def test_one_empty_set_is_enough(self):
        cls = HypothesisClass([[0], [1]])
        assert is_non_clashing(TeacherMap(cls, {0: [], 1: [(0, 1)]}))

    def test_missing_hypothesis(self, warmuth):
        with pytest.raises(ValidationError):
            find_clash(TeacherMap(warmuth, {"h1": [("x1", 1)]}))

    def test_bundled_gvs_sequences(self):
        assert is_non_clashing(get_teacher_map("warmuth-gvs"))
        assert is_non_clashing(get_teacher_map("appendix-gvs"))


class TestNctd:
    def test_bundled_classes(self, warmuth, appendix):
        k, T = nctd(warmuth)
        assert k == 2
        assert T.size == 2
        assert is_non_clashing(T)

        k, T = nctd(appendix)
        assert k == 1
        assert is_non_clashing(T)

    def test_singleton(self):
        cls = HypothesisClass([[1, 0, 1]])
        k, T = nctd(cls)
        assert k == 0
        assert T[0] == ()

    def test_informative_instances(self):
        cls = HypothesisClass([[0, 1, 0, 1], [1, 0, 0, 1]])
        assert informative_instances(cls.full) == (0,)

    def test_capacity(self, warmuth):
        with pytest.raises(CapacityError):
            nctd(warmuth, cap=5)

    def test_powerset(self):
        for k in (2, 3):
            value, T = nctd(powerset_class(k))
            assert value >= math.ceil(k / 2)
            assert is_non_clashing(T)

    @pytest.mark.slow
    def test_powerset_4(self):
        value, T = nctd(powerset_class(4))
        assert value >= 2
        assert is_non_clashing(T)
