from typing import NamedTuple

import pandas as pd

from .nctd import TeacherMap, nctd
from .teaching_sets import rtd_layers, teaching_sets
from .vcd import shattered_set, vcd
from ..core import VersionSpace, as_version_space


class DimensionReport(NamedTuple):
    """
    Classical teaching dimensions of a version space with their witnesses.

    Witnesses are a dictionary with keys:

    * ``shattered``: a maximum shattered instance set;
    * ``td``: minimal teaching set of each hypothesis;
    * ``rtd``: peeling layers as (members, size) pairs;
    * ``nctd``: a non-clashing teacher map of minimum order.
    """

    vcd: int
    td: int
    rtd: int
    nctd: int
    witnesses: dict

    @property
    def cls(self):
        return self.witnesses["nctd"].cls

    def to_json(self):
        cls = self.cls
        names = cls.hypothesis_names
        witnesses = {
            "shattered": [cls.instance_names[x] for x in self.witnesses["shattered"]],
            "td": {names[h]: cls.example_names(S) for h, S in self.witnesses["td"].items()},
            "rtd": [
                {"hypotheses": [names[h] for h in layer], "size": size}
                for layer, size in self.witnesses["rtd"]
            ],
            "nctd": self.witnesses["nctd"].to_json(),
        }
        return {
            "vcd": self.vcd,
            "td": self.td,
            "rtd": self.rtd,
            "nctd": self.nctd,
            "witnesses": witnesses,
        }

    def to_frame(self) -> pd.DataFrame:
        """
        One row per hypothesis with its teaching set, peeling layer and
        non-clashing teaching set.
        """
        cls = self.cls
        layer_of = {}
        for i, (layer, _) in enumerate(self.witnesses["rtd"]):
            for h in layer:
                layer_of[h] = i + 1

        def fmt(examples):
            return " ".join(f"({cls.instance_names[z.instance]},{int(z.label)})" for z in examples)

        T: TeacherMap = self.witnesses["nctd"]
        rows = []
        for h, S in self.witnesses["td"].items():
            rows.append(
                {
                    "hypothesis": cls.hypothesis_names[h],
                    "td_set": fmt(S),
                    "td_size": len(S),
                    "rtd_layer": layer_of[h],
                    "nctd_set": fmt(T[h]),
                    "nctd_size": len(T[h]),
                }
            )
        return pd.DataFrame(rows).set_index("hypothesis")


def dimension_report(H: VersionSpace, cap: int = None) -> DimensionReport:
    """
    Compute VCD, TD, RTD and NCTD of H in one go.
    """
    H = as_version_space(H)
    sets = teaching_sets(H)
    layers = rtd_layers(H)
    k, T = nctd(H, cap=cap)
    witnesses = {"shattered": shattered_set(H), "td": sets, "rtd": layers, "nctd": T}
    return DimensionReport(
        vcd=vcd(H),
        td=max(len(S) for S in sets.values()),
        rtd=max(size for _, size in layers),
        nctd=k,
        witnesses=witnesses,
    )
