import pytest

from pyteach.construct import build_sigma_lvs, partition_class
from pyteach.corpus import random_classes
from pyteach.dims import compact_distinguishable_set, vcd
from pyteach.types import ValidationError


class TestPartition:
    def test_appendix(self, appendix):
        partition = partition_class(appendix.full, ["x2", "x3", "x4", "x5"], "h1")
        blocks = [(b.members.names, b.pivot, b.label) for b in partition.blocks]
        assert blocks == [
            (["h2"], 1, True),
            (["h3"], 2, True),
            (["h4", "h6"], 3, True),
            (["h5"], 4, True),
            (["h1"], None, None),
        ]
        assert partition.blocks[2].instances == (4,)

    def test_warmuth(self, warmuth):
        partition = partition_class(warmuth.full, range(5), "h1")
        blocks = [(b.members.names, b.pivot, b.label) for b in partition.blocks]
        assert blocks == [
            (["h3"], 0, False),
            (["h4", "h10"], 1, False),
            (["h2", "h7", "h8"], 2, True),
            (["h6", "h9"], 3, True),
            (["h5"], 4, True),
            (["h1"], None, None),
        ]
        assert partition.blocks[2].instances == (3, 4)

    def test_to_json(self, appendix):
        data = partition_class(appendix.full, ["x2", "x3", "x4", "x5"], "h1").to_json()
        assert data["reference"] == "h1"
        assert data["compact_set"] == ["x2", "x3", "x4", "x5"]
        assert data["blocks"][0] == {"members": ["h2"], "pivot": "x2", "label": 1}
        assert data["blocks"][-1] == {"members": ["h1"], "pivot": None, "label": None}

    def test_errors(self, appendix):
        with pytest.raises(ValidationError):
            partition_class(appendix.full, range(6), "h1")
        with pytest.raises(ValidationError):
            partition_class(appendix.full.without("h1"), ["x2", "x3", "x4", "x5"], "h1")

    @pytest.mark.slow
    def test_invariants_on_every_level(self):
        def check(H, X, h_ref):
            cls = H.cls
            X = compact_distinguishable_set(H, X)
            partition = partition_class(H, X, h_ref)
            union = 0
            for block in partition.blocks:
                assert block.members
                assert union & block.members.mask == 0
                union |= block.members.mask
            assert union == H.mask
            assert partition.blocks[-1].members.mask == 1 << h_ref

            parent = vcd(H, X)
            for block in partition.blocks[:-1]:
                for h in block.members:
                    assert cls.label(h, block.pivot) == block.label
                assert block.label != cls.label(h_ref, block.pivot)
                assert vcd(block.members, block.instances) < parent
                if len(block.members) > 1:
                    check(block.members, block.instances, min(block.members))

        for cls in random_classes(100, 10, 6, seed=22):
            for h_ref in range(cls.num_hypotheses):
                check(cls.full, range(cls.num_instances), h_ref)

    def test_lvs_records_descend(self, warmuth):
        construction = build_sigma_lvs(warmuth, "h1")
        top = vcd(warmuth.full)
        for record in construction.records:
            if record.depth == 0:
                assert vcd(record.block) < top
        assert [r.block.names for r in construction.records if r.depth == 0] == [
            ["h3"],
            ["h4", "h10"],
            ["h2", "h7", "h8"],
            ["h6", "h9"],
            ["h5"],
        ]
