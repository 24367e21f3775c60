"""JSON preset loading for codes, graphs, and concatenated pipelines.

Preset shapes::

    graph:    {"type": "complete", "delta": 7}
              {"type": "random", "n": 50, "delta": 4, "seed": 1}
    grs:      {"ell": 3, "delta": 7, "k": 3,
               "eval_points": [...]?, "multipliers": [...]?}
    expander: {"graph": {...}, "code_a": {...grs}, "code_b": {...grs}, "m": 12?}
    outer:    expander preset, or {"type": "grs", ...grs}
    concat:   {"inner": {"type": "random", "k_in": 4, "n_in": 8, "seed": 1} |
                        {"type": "profile", "k_in": 4, "pi": 0.01, "seed": 1,
                         "n_in": 4?},
               "outer": {...}}
"""

from __future__ import annotations

import json

from .concat import ConcatCode, GrsOuter
from .expander import ExpanderCode
from .graphs import BipartiteGraph, complete_bipartite, random_regular_bipartite
from .grs import GrsCode
from .inner import ProfileInner, RandomLinearInner


def load_graph(spec: dict) -> BipartiteGraph:
    kind = spec.get("type", "complete")
    if kind == "complete":
        return complete_bipartite(int(spec["delta"]))
    if kind == "random":
        return random_regular_bipartite(int(spec["n"]), int(spec["delta"]), int(spec["seed"]))
    raise ValueError(f"unknown graph type {kind!r}")


def load_expander(spec: dict) -> ExpanderCode:
    graph = load_graph(spec["graph"])
    code_a = GrsCode.from_preset(spec["code_a"])
    code_b = GrsCode.from_preset(spec.get("code_b", spec["code_a"]))
    code = ExpanderCode(graph, code_a, code_b)
    if "m" in spec:
        code.decode_iterations = int(spec["m"])
    return code


def load_outer(spec: dict):
    if spec.get("type") == "grs":
        return GrsOuter(GrsCode.from_preset(spec))
    return load_expander(spec)


def load_inner(spec: dict):
    kind = spec["type"]
    if kind == "random":
        return RandomLinearInner(int(spec["k_in"]), int(spec["n_in"]), int(spec.get("seed", 0)))
    if kind == "profile":
        return ProfileInner(
            int(spec["k_in"]),
            float(spec["pi"]),
            seed=int(spec.get("seed", 0)),
            n_in=int(spec["n_in"]) if "n_in" in spec else None,
        )
    raise ValueError(f"unknown inner code type {kind!r}")


def load_concat(spec: dict) -> ConcatCode:
    return ConcatCode(load_inner(spec["inner"]), load_outer(spec["outer"]))


def load_preset_file(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
