"""
Recompute the reference values for the bundled classes and compare them
with the expected manifest.
"""
import json
from math import ceil

from ..config import memory
from ..construct import build_sigma_local_powerset, build_sigma_lvs
from ..corpus import get_class, get_sigma, list_artifacts, powerset_class
from ..db import DATABASES
from ..dims import dimension_report, nctd, sigma_td_lower_bound, vcd
from ..logging import log
from ..prefs import collusion_free_check
from ..teach import sigma_td_global_bruteforce, td_sigma

EXPECTED = DATABASES / "repro-expected.json"


def expected_values(path=EXPECTED) -> dict:
    with open(path) as fd:
        return json.load(fd)


def _dims(name) -> dict:
    report = dimension_report(get_class(name).full)
    return {"vcd": report.vcd, "td": report.td, "rtd": report.rtd, "nctd": report.nctd}


def _sigmas(name, h0="h1") -> dict:
    bundled = {a.name for a in list_artifacts("sigma")}
    out = {}
    for sigma_name in (f"{name}-const", f"{name}-global", f"{name}-gvs", f"{name}-lvs"):
        if sigma_name in bundled:
            out[f"td_sigma:{sigma_name}"] = td_sigma(get_sigma(sigma_name), h0)
    return out


def _warmuth() -> dict:
    values = {**_dims("warmuth"), **_sigmas("warmuth")}
    construction = build_sigma_lvs(get_class("warmuth"), "h1")
    values["td_sigma:lvs-construction"] = td_sigma(construction.sigma, "h1")
    values["collusion_free:lvs-construction"] = bool(collusion_free_check(construction.sigma))
    return values


def _appendix() -> dict:
    values = {**_dims("appendix"), **_sigmas("appendix")}
    values["global_oracle"] = sigma_td_global_bruteforce(get_class("appendix"), "h1")
    return values


def _powerset(k) -> dict:
    construction = build_sigma_local_powerset(k)
    return {
        "vcd": vcd(construction.cls.full),
        "depth": construction.depth,
        "td_sigma:local-construction": td_sigma(construction.sigma, 0),
    }


def _powerset_nctd() -> dict:
    return {str(k): nctd(powerset_class(k).full)[0] >= ceil(k / 2) for k in (2, 3, 4)}


def _bound() -> dict:
    return {str(d): sigma_td_lower_bound(d) for d in (1, 4, 16)}


GROUPS = {
    "warmuth": _warmuth,
    "appendix": _appendix,
    "powerset-2": lambda: _powerset(2),
    "powerset-7": lambda: _powerset(7),
    "powerset-nctd": _powerset_nctd,
    "bound": _bound,
}


def compute_values(groups=None) -> dict:
    """
    Compute the values of the given manifest groups, or of every group.
    """
    groups = list(GROUPS) if groups is None else list(groups)
    values = {}
    for group in groups:
        if group not in GROUPS:
            log.warning(f"repro: unknown group {group}")
            continue
        log.info(f"repro: {group}")
        values[group] = GROUPS[group]()
    return values


def reproduce(expected: dict = None, cache=False):
    """
    Return (values, mismatches) where mismatches lists every expected entry
    whose computed value differs.
    """
    if expected is None:
        expected = expected_values()
    compute = memory("repro").cache(compute_values) if cache else compute_values
    values = compute(sorted(expected))

    mismatches = []
    for group, entries in expected.items():
        for key, value in entries.items():
            got = values.get(group, {}).get(key)
            if got != value:
                mismatches.append({"group": group, "key": key, "expected": value, "got": got})
    return values, mismatches
