import pytest

from pyteach.core import (
    HypothesisClass,
    LabeledExample,
    VersionSpace,
    as_version_space,
    consistent,
    count_patterns,
    hamming,
    reachable_version_spaces,
    restrict_patterns,
    version_space,
)
from pyteach.types import CapacityError, ValidationError


class TestVersionSpace:
    def test_restrict(self, warmuth):
        V = warmuth.full.restrict(warmuth.example("x1", 1))
        assert V.names == ["h1", "h5", "h6", "h8", "h10"]
        assert V.restrict(warmuth.example("x2", 1)).names == ["h1", "h6"]

    def test_version_space_of_examples(self, warmuth):
        assert version_space([], warmuth) == warmuth.full
        Z = [LabeledExample(0, True), LabeledExample(0, False)]
        V = version_space(Z, warmuth)
        assert not V
        assert len(V) == 0

    def test_set_operations(self, warmuth):
        A = VersionSpace.from_members(warmuth, ["h1", "h2", "h3"])
        B = VersionSpace.from_members(warmuth, ["h2", "h3", "h4"])
        assert (A & B).names == ["h2", "h3"]
        assert (A | B).names == ["h1", "h2", "h3", "h4"]
        assert (A - B).names == ["h1"]
        assert A & B <= A
        assert not A <= B
        assert "h1" in A and "h4" not in A and "h99" not in A
        assert list(A) == [0, 1, 2]

    def test_hashable_and_canonical(self, warmuth):
        A = VersionSpace.from_members(warmuth, ["h3", "h1"])
        B = VersionSpace.from_members(warmuth, [0, 2])
        assert A == B
        assert len({A, B}) == 1
        assert A.key == (0, 2)
        assert A.to_json() == [0, 2]

    def test_cross_class_operations_fail(self, warmuth, appendix):
        with pytest.raises(ValidationError):
            warmuth.full & appendix.full
        with pytest.raises(ValidationError):
            as_version_space(warmuth.full, appendix)

    def test_invalid_mask(self, warmuth):
        with pytest.raises(ValidationError):
            VersionSpace(warmuth, 1 << 10)

    def test_without(self, warmuth):
        assert len(warmuth.full.without("h1")) == 9


class TestPatterns:
    def test_consistent(self, warmuth):
        assert consistent("h1", LabeledExample(0, True), warmuth)
        assert not consistent("h2", LabeledExample(0, True), warmuth)

    def test_restrict_patterns(self, warmuth):
        P = restrict_patterns(warmuth.full, ["x1", "x2"])
        assert P.instances == (0, 1)
        assert len(P) == 4
        assert P.to_json()["patterns"] == ["00", "01", "10", "11"]
        with pytest.raises(ValidationError):
            restrict_patterns(warmuth.full, [])

    def test_count_patterns(self, warmuth):
        assert count_patterns(warmuth.full, [0, 1, 2, 3, 4]) == 10
        assert count_patterns(warmuth.full, []) == 1
        assert count_patterns(VersionSpace(warmuth, 0), [0]) == 0

    def test_hamming(self, warmuth):
        assert hamming("h1", "h1", warmuth) == 0
        assert hamming("h1", "h2", warmuth) == 2
        assert hamming("h1", "h3", warmuth) == 4


class TestReachable:
    def test_two_hypotheses(self):
        cls = HypothesisClass([[0, 0], [1, 0]])
        spaces = reachable_version_spaces(cls)
        assert spaces[0] == cls.full
        assert {V.mask for V in spaces} == {0b11, 0b01, 0b10, 0b00}

    def test_capacity(self, warmuth):
        with pytest.raises(CapacityError):
            reachable_version_spaces(warmuth, cap=3)
