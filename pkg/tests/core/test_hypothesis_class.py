import numpy as np
import pytest

from pyteach.core import HypothesisClass, LabeledExample
from pyteach.types import ValidationError
from pyteach.utils import iter_bits


class TestHypothesisClass:
    def test_warmuth_rows(self, warmuth):
        assert warmuth.num_hypotheses == 10
        assert warmuth.num_instances == 5
        assert warmuth.rows[0] == (1, 1, 0, 0, 0)
        assert warmuth.rows[9] == (1, 0, 1, 0, 1)
        assert len(set(warmuth.rows)) == 10

    def test_appendix_rows(self, appendix):
        assert appendix.rows[2] == (1, 1, 1, 0, 0, 0)
        assert appendix.rows[5] == (0, 0, 0, 1, 1, 1)

    def test_default_names(self):
        cls = HypothesisClass([[1, 0], [0, 1]])
        assert cls.hypothesis_names == ("h1", "h2")
        assert cls.instance_names == ("x1", "x2")

    def test_matrix_is_read_only(self, warmuth):
        assert warmuth.matrix.dtype == np.bool_
        with pytest.raises(ValueError):
            warmuth.matrix[0, 0] = False

    def test_resolve_names_and_indices(self, warmuth):
        assert warmuth.hypothesis("h10") == 9
        assert warmuth.hypothesis(3) == 3
        assert warmuth.instance("x2") == 1

        with pytest.raises(ValidationError):
            warmuth.hypothesis("h11")
        with pytest.raises(ValidationError):
            warmuth.hypothesis(10)
        with pytest.raises(ValidationError):
            warmuth.instance(True)

    def test_labels_and_examples(self, warmuth):
        assert warmuth.label("h1", "x1") is True
        assert warmuth.label("h1", "x3") is False
        assert warmuth.example("x2", 1) == LabeledExample(1, True)
        assert warmuth.example_for(1, 0) == LabeledExample(0, False)
        assert warmuth.names_of(warmuth.consistent_mask(LabeledExample(0, True))) == [
            "h1",
            "h5",
            "h6",
            "h8",
            "h10",
        ]
        with pytest.raises(ValidationError):
            warmuth.example("x1", 2)

    def test_label_masks_partition_the_class(self, warmuth):
        for neg, pos in warmuth.label_masks:
            assert neg & pos == 0
            assert neg | pos == warmuth.full_mask

    def test_label_masks_are_python_ints(self, warmuth):
        for masks in warmuth.label_masks:
            assert all(type(m) is int for m in masks)
        assert list(iter_bits(warmuth.label_masks[0][1])) == [0, 4, 5, 7, 9]

    def test_invalid_classes(self):
        with pytest.raises(ValidationError):
            HypothesisClass([])
        with pytest.raises(ValidationError):
            HypothesisClass([[]])
        with pytest.raises(ValidationError):
            HypothesisClass([[1, 0], [1]])
        with pytest.raises(ValidationError):
            HypothesisClass([[1, 2]])
        with pytest.raises(ValidationError):
            HypothesisClass([[1, 0], [1, 0]])
        with pytest.raises(ValidationError):
            HypothesisClass([[1, 0], [0, 1]], hypothesis_names=["a", "a"])
        with pytest.raises(ValidationError):
            HypothesisClass([[1, 0], [0, 1]], instance_names=["a"])

    def test_to_json(self):
        cls = HypothesisClass([[1, 0], [0, 1]], hypothesis_names=["a", "b"])
        assert cls.to_json() == {
            "instances": ["x1", "x2"],
            "hypotheses": [{"name": "a", "labels": [1, 0]}, {"name": "b", "labels": [0, 1]}],
        }
