"""Closed-form analysis toolbox: binary entropy and its inverse (exact and
second-order Taylor form), the concatenation error exponent and its optimizing
constants, the random-coding exponent with its near-capacity quadratic law,
and the degree lower bounds for the iterated-ML baseline constructions.

Everything here is a pure function of its arguments; identical inputs give
bit-identical outputs (optimizers are deterministic: closed-form inner solves
plus golden-section search, no stochastic steps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LOG2E = math.log2(math.e)


# -- binary entropy ----------------------------------------------------------

def h2(x: float) -> float:
    """Binary entropy in bits, with the 0*log(0) = 0 convention."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument must be in [0,1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def h2_inv(y: float) -> float:
    """Inverse of h2 on [0, 1/2], by bisection (h2 is strictly increasing
    there); resolves well below the documented 1e-12 tolerance."""
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"inverse-entropy argument must be in [0,1], got {y}")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if h2(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def h2_inv_taylor(p: float, eps: float) -> float:
    """Second-order expansion of H2^-1(H2(p) + eps*(1 - H2(p))) around p.

    The remainder is cubic in eps.  Note p*(p-1) < 0, so the quadratic
    correction adds to the linear one.
    """
    if not 0.0 < p < 0.5:
        raise ValueError(f"need 0 < p < 1/2, got {p}")
    hp = h2(p)
    slope = math.log2((1.0 - p) / p)
    linear = eps * (1.0 - hp) / slope
    quadratic = (eps * (1.0 - hp)) ** 2 * LOG2E / (2.0 * p * (p - 1.0) * slope**3)
    return p + linear - quadratic


# -- concatenation exponent (i.i.d. inner failures) ---------------------------

@dataclass(frozen=True)
class ForneyBound:
    beta: float
    pi: float
    exponent: float  # clamped at zero
    s_star: float


def mu_neg_s(pi: float, s: float) -> float:
    """Log moment generating value ln(pi e^s + (1-pi) e^-s)."""
    return math.log(pi * math.exp(s) + (1.0 - pi) * math.exp(-s))


def chernoff_objective(beta: float, pi: float, s: float) -> float:
    """s(2 beta - 1) - mu(-s); its maximum over s is the closed-form exponent."""
    return s * (2.0 * beta - 1.0) - mu_neg_s(pi, s)


def forney_exponent(beta: float, pi: float) -> ForneyBound:
    """Exponent of the probability that more than beta*n of n i.i.d. inner
    decoders (failure probability pi) fail.  Negative values are clamped to
    zero; the optimizing tilt s_star is reported alongside."""
    if not 0.0 < beta < 1.0 or not 0.0 < pi < 1.0:
        raise ValueError("beta and pi must lie in (0,1)")
    e = (
        -beta * math.log(pi)
        - (1.0 - beta) * math.log(1.0 - pi)
        + beta * math.log(beta)
        + (1.0 - beta) * math.log(1.0 - beta)
    )
    s_star = 0.5 * math.log((1.0 - pi) * 2.0 * beta / (pi * (2.0 - 2.0 * beta)))
    return ForneyBound(beta, pi, max(0.0, e), s_star)


def binomial_tail_ge(n: int, threshold: float, pi: float) -> float:
    """Exact P(Binomial(n, pi) >= threshold)."""
    k0 = max(0, math.ceil(threshold))
    return sum(
        math.comb(n, j) * pi**j * (1.0 - pi) ** (n - j) for j in range(k0, n + 1)
    )


# -- random coding exponent ----------------------------------------------------

def t_fn(x: float, y: float) -> float:
    """Cross entropy -x log2 y - (1-x) log2 (1-y)."""
    return -x * math.log2(y) - (1.0 - x) * math.log2(1.0 - y)


def critical_rate(p: float) -> float:
    rho0 = math.sqrt(p) / (math.sqrt(p) + math.sqrt(1.0 - p))
    return 1.0 - h2(rho0)


def _e0_high(rate: float, p: float) -> float:
    return t_fn(h2_inv(1.0 - rate), p) + rate - 1.0


def _e0_middle(rate: float, p: float) -> float:
    return 1.0 - math.log2(1.0 + math.sqrt(4.0 * p * (1.0 - p))) - rate


def _e0_low(rate: float, p: float) -> float:
    return -h2_inv(1.0 - rate) * math.log2(math.sqrt(4.0 * p * (1.0 - p)))


def low_rate_boundary(p: float) -> float:
    """Rate where the middle and low branches of the exponent meet (standard
    convention; the displayed piecewise form leaves this threshold implicit).

    The branches touch tangentially at the distance s/(1+s), s = sqrt(4p(1-p)):
    there the low branch equals -d log2(s) = H2(d) - log2(1+s), which is the
    straight-line value at rate 1 - H2(d)."""
    s = math.sqrt(4.0 * p * (1.0 - p))
    return 1.0 - h2(s / (1.0 + s))


@dataclass(frozen=True)
class GallagerExponent:
    p: float
    rate: float
    regime: str  # "high-rate" | "middle" | "low-rate"
    value: float
    r_crit: float
    r_min: float
    delta_gv: float


def gallager_e0(rate: float, p: float) -> GallagerExponent:
    """Random-coding error exponent for rate R over crossover p, in bits.

    Piecewise: sphere-packing-style branch above the critical rate, the
    straight line below it, and the distance-weighted branch at low rates.
    Zero at capacity and clamped at zero above it.
    """
    if not 0.0 <= rate < 1.0:
        raise ValueError(f"rate must be in [0,1), got {rate}")
    if not 0.0 < p < 0.5:
        raise ValueError(f"need 0 < p < 1/2, got {p}")
    r_crit = critical_rate(p)
    r_min = low_rate_boundary(p)
    delta_gv = h2_inv(1.0 - rate)
    if rate >= r_crit:
        regime, value = "high-rate", _e0_high(rate, p)
    elif rate >= r_min:
        regime, value = "middle", _e0_middle(rate, p)
    else:
        regime, value = "low-rate", _e0_low(rate, p)
    return GallagerExponent(p, rate, regime, max(0.0, value), r_crit, r_min, delta_gv)


def c_p(p: float) -> float:
    """Quadratic coefficient of the exponent near capacity:
    E0((1-eps)C, p) = c_p * eps^2 + O(eps^3)."""
    if not 0.0 < p < 0.5:
        raise ValueError(f"need 0 < p < 1/2, got {p}")
    hp = h2(p)
    slope = math.log2((1.0 - p) / p)
    return (1.0 - hp) ** 2 * LOG2E / (2.0 * p * (1.0 - p) * slope**2)


# -- exponent optimization over the construction constants ----------------------

def upsilon_value(kappa: float, eta: float, rho: float) -> float:
    """Objective eta(1-kappa)/(2 rho) - 2 sqrt(eta / (rho^3 (1-eta)))."""
    return eta * (1.0 - kappa) / (2.0 * rho) - 2.0 * math.sqrt(
        eta / (rho**3 * (1.0 - eta))
    )


def rho_floor(kappa: float, eta: float) -> float:
    """Admissibility floor for rho at the given (kappa, eta)."""
    return 16.0 / (eta * (1.0 - eta) * (1.0 - kappa) ** 2)


def rho_stationary(eta: float) -> float:
    """Closed-form stationary rho of the kappa=0 objective."""
    return 36.0 / (eta * (1.0 - eta))


def _golden_max(fn, lo: float, hi: float, tol: float = 1e-13):
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
    x = 0.5 * (a + b)
    return x, fn(x)


def upsilon_optimize() -> tuple[float, float, float]:
    """Maximize the kappa -> 0 objective over (eta, rho).

    The rho direction has the closed-form stationary point 36/(eta(1-eta)),
    leaving a one-dimensional concave profile in eta that golden-section
    search settles; the optimum lands at eta = 2/3, rho = 162 with value
    1/1458, comfortably above the admissibility floor 16/(eta(1-eta)).
    """
    profile = lambda eta: upsilon_value(0.0, eta, rho_stationary(eta))
    eta, best = _golden_max(profile, 1e-9, 1.0 - 1e-9)
    return eta, rho_stationary(eta), best


def error_exponent(cap: float, eps: float, t: float) -> float:
    """Optimized exponent (2t-1) * C * eps^3 / (2916 log2 e)."""
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if not 0.0 <= eps < 1.0 or not 0.0 < cap <= 1.0:
        raise ValueError("need eps in [0,1) and cap in (0,1]")
    return (2.0 * t - 1.0) * (cap * eps**3 / (2916.0 * LOG2E))


def error_exponent_general(upsilon: float, cap: float, eps: float, t: float) -> float:
    """Pre-optimization form: Upsilon (2t-1) C eps^3 / (2 log2 e)."""
    return upsilon * (2.0 * t - 1.0) * cap * eps**3 / (2.0 * LOG2E)


# -- degree lower bounds for the iterated-ML baseline ----------------------------

# The O(1/sqrt(degree)) eigenvalue term carries no explicit constant in the
# bound it comes from; 2/sqrt(degree) matches the Ramanujan estimate used
# everywhere else and is exposed as gap_constant.

def _gap_fn(variant: str):
    if variant == "binary":
        return h2_inv
    if variant == "large-field":
        return lambda x: x
    raise ValueError(f"variant must be 'binary' or 'large-field', got {variant!r}")


def bz2_exponent_term(
    rate: float,
    p: float,
    delta: int,
    variant: str = "binary",
    gap_constant: float = 2.0,
    r0: float | None = None,
    grid: int = 2000,
) -> float:
    """Main exponent term of the two-sided iterated-ML construction:
    max over R0 in [R, C) of E0(R0, p) (g(R0 - R)/2 - gap_constant/sqrt(delta)),
    g inverse-entropy for the binary variant, identity over large fields.

    Passing r0 evaluates that single point instead of maximizing (the
    maximization is a deterministic scan of `grid` points)."""
    g = _gap_fn(variant)
    cap = 1.0 - h2(p)
    if rate >= cap:
        raise ValueError(f"need rate < capacity, got {rate} >= {cap}")
    penalty = gap_constant / math.sqrt(delta)

    def term(x: float) -> float:
        return gallager_e0(x, p).value * (g(x - rate) / 2.0 - penalty)

    if r0 is not None:
        if not rate <= r0 < cap:
            raise ValueError("r0 must lie in [rate, capacity)")
        return term(r0)
    step = (cap - rate) / grid
    return max(term(rate + i * step) for i in range(grid))


def bz2_min_degree(
    eps: float, p: float, variant: str = "binary", gap_constant: float = 2.0
) -> int:
    """Smallest degree admitting a positive term as R0 -> capacity:
    ceil((2 gap_constant / g(C eps))^2) + 1."""
    g = _gap_fn(variant)
    cap = 1.0 - h2(p)
    return math.ceil((2.0 * gap_constant / g(cap * eps)) ** 2) + 1


@dataclass(frozen=True)
class Bz3Report:
    e0: float
    m_exact: float
    m_approx: float
    alpha_lower: float
    positive: bool


def bz3_positivity(delta: int, p: float, eps: float) -> Bz3Report:
    """Exponent positivity for the three-layer baseline at rate (1-eps)C.

    m_exact is the log-likelihood slope at the Gilbert-Varshamov distance;
    m_approx its first-order form in eps; alpha_lower = 4 sqrt(delta-1)/delta
    bounds the weighting constant from below.  Positive iff E0 exceeds
    m_exact * alpha_lower.  Only the above-critical-rate regime is covered.
    """
    cap = 1.0 - h2(p)
    rate = (1.0 - eps) * cap
    if rate < critical_rate(p):
        raise ValueError(
            f"rate {rate} below the critical rate {critical_rate(p)}; "
            "the positivity analysis needs eps small enough for the high-rate regime"
        )
    delta_gv = h2_inv(1.0 - rate)
    m_exact = math.log2(delta_gv * (1.0 - p) / ((1.0 - delta_gv) * p))
    m_approx = (
        LOG2E / (p * (1.0 - p)) * eps * (1.0 - h2(p)) / math.log2((1.0 - p) / p)
    )
    alpha_lower = 4.0 * math.sqrt(delta - 1.0) / delta
    e0 = gallager_e0(rate, p).value
    return Bz3Report(e0, m_exact, m_approx, alpha_lower, e0 > m_exact * alpha_lower)
