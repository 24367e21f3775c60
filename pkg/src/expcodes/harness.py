"""Monte Carlo experiments and complexity probes.

Trials are embarrassingly parallel: every trial derives its own RNG streams
from (master seed, trial index), so estimates are identical for any thread
count and aggregation order.  A failure is a declared decoder error or an
undetected wrong codeword, i.e. block error probability.

Operation counters, not wall time, are the complexity metric; one
constituent GRS decode is charged delta^2 and one ML decode 2^k * delta.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .channel import Bsc
from .seeding import derive_seed


def wilson_interval(failures: int, trials: int, z: float = 1.959964) -> tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("need at least one trial")
    phat = failures / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    spread = (z / denom) * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    return max(0.0, center - spread), min(1.0, center + spread)


@dataclass(frozen=True)
class TrialPlan:
    code: object          # ConcatCode (or anything with the same surface)
    p: float
    trials: int
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("need trials >= 1")


@dataclass
class ErrorEstimate:
    failures: int
    trials: int
    estimate: float
    wilson_low: float
    wilson_high: float
    mean_ops: float

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "failures": self.failures,
            "trials": self.trials,
            "estimate": self.estimate,
            "wilson_low": self.wilson_low,
            "wilson_high": self.wilson_high,
            "mean_ops": self.mean_ops,
        }


def _run_trial(code, p: float, seed: int, trial: int) -> tuple[bool, float]:
    rng = np.random.default_rng(derive_seed(seed, trial, 0))
    inner = code.inner.clone(trial)
    trial_code = type(code)(inner, code.outer)
    message = trial_code.random_message(rng)
    sent = trial_code.encode(message)
    channel = Bsc(p, seed=derive_seed(seed, trial, 1))
    received = channel.transmit(sent)
    decoded, trace = trial_code.decode_with_trace(received)
    ops = trial_code.n * getattr(inner, "ops_per_decode", 0)
    if trace is not None:
        ops += trace.ops
    failed = decoded is None or not np.array_equal(decoded, sent)
    return failed, float(ops)


def monte_carlo(plan: TrialPlan) -> ErrorEstimate:
    """Encode random messages, push them through the channel, decode, count
    block failures.  Reproducible for any thread count."""
    run = lambda t: _run_trial(plan.code, plan.p, plan.seed, t)
    if plan.threads > 1:
        with ThreadPoolExecutor(max_workers=plan.threads) as pool:
            results = list(pool.map(run, range(plan.trials)))
    else:
        results = [run(t) for t in range(plan.trials)]
    failures = sum(1 for failed, _ in results if failed)
    total_ops = sum(ops for _, ops in results)
    low, high = wilson_interval(failures, plan.trials)
    return ErrorEstimate(
        failures=failures,
        trials=plan.trials,
        estimate=failures / plan.trials,
        wilson_low=low,
        wilson_high=high,
        mean_ops=total_ops / plan.trials,
    )


# -- scaling fits ---------------------------------------------------------------


@dataclass
class ScalingReport:
    model: str                       # "linear" | "loglog" | "exp2"
    points: list = field(default_factory=list)  # (x, ops) pairs as measured
    slope: float = 0.0
    intercept: float = 0.0
    r_squared: float = 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "model": self.model,
            "points": [[float(x), float(y)] for x, y in self.points],
            "slope": self.slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
        }


def _least_squares(xs: np.ndarray, ys: np.ndarray) -> tuple[float, float, float]:
    slope, intercept = np.polyfit(xs, ys, 1)
    pred = slope * xs + intercept
    ss_res = float(np.sum((ys - pred) ** 2))
    ss_tot = float(np.sum((ys - np.mean(ys)) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return float(slope), float(intercept), r2


def scaling_probe(family, sizes, model: str = "linear") -> ScalingReport:
    """Fit decode cost against size for a family of instances.

    family(size) must return an (x, ops) pair -- x is the abscissa actually
    fitted (e.g. total code length for a per-side size).  Models: "linear"
    fits ops ~ x, "loglog" fits log(ops) ~ log(x), "exp2" fits
    log2(ops) ~ x.
    """
    if len(sizes) < 4:
        raise ValueError("need at least 4 sizes for a meaningful fit")
    points = [family(s) for s in sizes]
    xs = np.array([float(x) for x, _ in points])
    ys = np.array([float(y) for _, y in points])
    if model == "linear":
        fit_x, fit_y = xs, ys
    elif model == "loglog":
        fit_x, fit_y = np.log(xs), np.log(ys)
    elif model == "exp2":
        fit_x, fit_y = xs, np.log2(ys)
    else:
        raise ValueError(f"unknown model {model!r}")
    slope, intercept, r2 = _least_squares(fit_x, fit_y)
    return ScalingReport(model=model, points=points, slope=slope, intercept=intercept, r_squared=r2)


# -- instance families for the probes ---------------------------------------------


def expander_decode_family(
    delta: int = 4,
    ell: int = 2,
    k: int = 2,
    seed: int = 7,
    error_fraction: float = 0.05,
    m: int | None = None,
    early_stop: bool = True,
):
    """family(n) -> (N, decode ops) for random-graph instances at fixed degree.

    Decodes a corrupted all-zero codeword (the code is linear, so noise
    around zero is representative) and reports the trace's op count.
    """
    from .expander import ExpanderCode
    from .graphs import complete_bipartite, random_regular_bipartite
    from .gf import Field
    from .grs import GrsCode

    fld = Field(ell)
    code = GrsCode(fld, delta, k)

    def family(n: int) -> tuple[float, float]:
        graph = (
            complete_bipartite(delta)
            if n == delta
            else random_regular_bipartite(n, delta, seed=derive_seed(seed, n))
        )
        ecode = ExpanderCode(graph, code, code)
        rng = np.random.default_rng(derive_seed(seed, n, 1))
        word = [0] * ecode.n
        errors = max(1, int(error_fraction * ecode.n))
        for pos in rng.choice(ecode.n, size=errors, replace=False):
            word[pos] = int(rng.integers(1, 1 << ecode.phi_bits))
        _, trace = ecode.decode(word, m=m, early_stop=early_stop)
        return float(ecode.num_edges), float(trace.ops)

    return family


def bz_decode_family(
    rate: float = 0.5,
    seed: int = 7,
    flip_count: int = 1,
    m: int | None = None,
    early_stop: bool = True,
):
    """family(delta) -> (delta, decode ops) with constituent dimension
    rate*delta on the complete bipartite graph of that degree."""
    from .bz import Bz2Code, RandomCodebook
    from .graphs import complete_bipartite

    def family(delta: int) -> tuple[float, float]:
        k = round(rate * delta)
        code_a = RandomCodebook(delta, k, derive_seed(seed, delta, 0))
        code_b = RandomCodebook(delta, k, derive_seed(seed, delta, 1))
        bz2 = Bz2Code(complete_bipartite(delta), code_a, code_b)
        rng = np.random.default_rng(derive_seed(seed, delta, 2))
        word = np.zeros(bz2.num_edges, dtype=np.uint8)
        flips = rng.choice(bz2.num_edges, size=flip_count, replace=False)
        word[flips] ^= 1
        _, trace = bz2.decode(word, m=m, early_stop=early_stop)
        return float(delta), float(trace.ops)

    return family
