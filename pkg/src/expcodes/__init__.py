"""Expander-based channel coding with concatenation and exponent analysis."""

from .analysis import (
    ForneyBound,
    GallagerExponent,
    c_p,
    error_exponent,
    forney_exponent,
    gallager_e0,
    h2,
    h2_inv,
    h2_inv_taylor,
    upsilon_optimize,
)
from .bz import Bz2Code, RandomCodebook
from .channel import Bsc, capacity
from .concat import ConcatCode, GrsOuter, kappa_select, select_alphabet, theorem1_check
from .expander import (
    DecodeTrace,
    ExpanderCode,
    beta_bound,
    distance_bound,
    iteration_bound,
    select_params,
)
from .gf import Field, field_new
from .graphs import BipartiteGraph, complete_bipartite, random_regular_bipartite, spectral
from .grs import ERASED, GrsCode
from .inner import ProfileInner, RandomLinearInner
from .harness import ErrorEstimate, TrialPlan, monte_carlo, scaling_probe, wilson_interval

__version__ = "0.1.0"

__all__ = [
    "Bsc",
    "BipartiteGraph",
    "Bz2Code",
    "ConcatCode",
    "DecodeTrace",
    "ERASED",
    "ErrorEstimate",
    "ExpanderCode",
    "Field",
    "ForneyBound",
    "GallagerExponent",
    "GrsCode",
    "GrsOuter",
    "ProfileInner",
    "RandomCodebook",
    "RandomLinearInner",
    "TrialPlan",
    "beta_bound",
    "c_p",
    "capacity",
    "complete_bipartite",
    "distance_bound",
    "error_exponent",
    "field_new",
    "forney_exponent",
    "gallager_e0",
    "h2",
    "h2_inv",
    "h2_inv_taylor",
    "iteration_bound",
    "kappa_select",
    "monte_carlo",
    "random_regular_bipartite",
    "scaling_probe",
    "select_alphabet",
    "select_params",
    "spectral",
    "theorem1_check",
    "upsilon_optimize",
    "wilson_interval",
]
