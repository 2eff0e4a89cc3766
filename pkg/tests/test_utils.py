import json
import math

import numpy as np
import pytest

from pyteach.core import LabeledExample
from pyteach.prefs import CollusionReport
from pyteach.utils import dumps, iter_bits, mask_of, popcount, to_json


class TestBits:
    def test_masks(self):
        assert mask_of([]) == 0
        assert mask_of([0, 3]) == 0b1001
        assert list(iter_bits(mask_of([5, 1, 2]))) == [1, 2, 5]
        assert popcount(0b10110) == 3

    def test_numpy_indices(self):
        mask = mask_of(np.flatnonzero([True, False, True]))
        assert type(mask) is int
        assert list(iter_bits(mask)) == [0, 2]

    def test_negative_bit(self):
        with pytest.raises(ValueError):
            mask_of([-1])


class TestJson:
    def test_scalars(self):
        assert to_json(np.int64(3)) == 3
        assert to_json(np.bool_(True)) is True
        assert to_json(math.inf) == "unreachable"
        assert to_json({1: {2, 1}}) == {"1": [1, 2]}

    def test_named_tuples_use_their_own_method(self):
        assert to_json(LabeledExample(2, True)) == [2, 1]
        assert to_json([CollusionReport(True)]) == [{"collusion_free": True}]

    def test_dumps_is_valid_json(self):
        data = {"cost": math.inf, "plan": (LabeledExample(0, False),)}
        assert json.loads(dumps(data)) == {"cost": "unreachable", "plan": [[0, 0]]}

    def test_invalid(self):
        with pytest.raises(TypeError):
            to_json(object())
