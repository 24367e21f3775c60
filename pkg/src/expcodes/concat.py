"""Concatenation of a binary inner code with a big-alphabet outer code,
plus the alphabet/constant selection machinery behind the sufficient
condition for an exponentially decaying block error rate.

An outer code here is anything exposing::

    n                outer length in symbols
    phi_bits         bits per symbol (must equal the inner dimension k_in)
    message_len      symbols of message
    encode_message(msg) -> list[int]          symbols
    decode(word)        -> (list[int] | None, trace | None)
    random_message(rng) -> msg

ExpanderCode satisfies this directly; GrsOuter below adapts a single GRS
code (one field element per symbol).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grs import GrsCode


class GrsOuter:
    """A GRS code as a symbol-level outer code (phi_bits = ell)."""

    def __init__(self, code: GrsCode):
        self.code = code
        self.n = code.delta
        self.phi_bits = code.field.ell
        self.message_len = code.k
        self.beta = (code.d / code.delta) / 2.0  # corrects < beta*n errors

    def encode_message(self, message: list[int]) -> list[int]:
        return self.code.encode_systematic(list(message))

    def decode(self, word: list):
        return self.code.decode_errors_erasures(list(word)), None

    def random_message(self, rng) -> list[int]:
        return [int(x) for x in rng.integers(0, self.code.field.q, self.code.k)]


class ConcatCode:
    """Inner (x) outer concatenated code over GF(2).

    The bijection between outer symbols and inner codewords is the
    systematic one: the symbol bits are the information bits of the inner
    codeword.  Immutable; inner decodes of distinct blocks are independent.
    """

    def __init__(self, inner, outer):
        if inner.k_in != outer.phi_bits:
            raise ValueError(
                f"inner dimension {inner.k_in} != outer symbol width {outer.phi_bits}"
            )
        self.inner = inner
        self.outer = outer
        self.n = outer.n
        self.n_cont = outer.n * inner.n_in
        self.rate_in = inner.k_in / inner.n_in

    @property
    def rate(self) -> float:
        """R_in times the outer rate (bits of message per channel bit)."""
        return self.rate_in * self.outer_rate

    @property
    def outer_rate(self) -> float:
        # symbol-level rate; for the expander outer this is
        # dimension / (k_a * n), for a GRS outer k / delta
        out = self.outer
        if hasattr(out, "dimension"):
            return out.dimension * out.field.ell / (out.phi_bits * out.n)
        return out.message_len / out.n

    def encode(self, message) -> np.ndarray:
        symbols = self.outer.encode_message(message)
        return np.concatenate([self.inner.encode(s) for s in symbols])

    def decode_with_trace(self, bits) -> tuple[np.ndarray | None, object | None]:
        word = np.asarray(bits, dtype=np.uint8)
        if word.shape != (self.n_cont,):
            raise ValueError(f"expected {self.n_cont} bits, got shape {word.shape}")
        n_in = self.inner.n_in
        symbols = [
            self.inner.decode(word[i * n_in : (i + 1) * n_in]) for i in range(self.n)
        ]
        decoded, trace = self.outer.decode(symbols)
        if decoded is None:
            return None, trace
        return np.concatenate([self.inner.encode(s) for s in decoded]), trace

    def decode(self, bits) -> np.ndarray | None:
        return self.decode_with_trace(bits)[0]

    def random_message(self, rng):
        return self.outer.random_message(rng)


# -- parameter selection for the sufficient condition -------------------------


def select_alphabet(
    eps: float, kappa: float, h0: float, available: list[float]
) -> float:
    """Smallest available symbol width (log2 of the alphabet size) at least
    1/(kappa*eps)^h0; the inner length then exceeds the same threshold."""
    if not 0.0 < eps < 1.0 or not 0.0 < kappa < 1.0 or h0 <= 0.0:
        raise ValueError("need eps, kappa in (0,1) and h0 > 0")
    threshold = 1.0 / (kappa * eps) ** h0
    for width in available:
        if width >= threshold:
            return width
    raise ValueError(
        f"no available symbol width reaches the required {threshold}; "
        f"largest offered is {max(available) if available else 'none'}"
    )


def kappa_select(b: float, vartheta: float, tol: float = 1e-12) -> float:
    """Largest kappa in (0,1) with kappa^b <= vartheta (1-kappa)^b / e.

    The ratio kappa^b / (1-kappa)^b is increasing, so bisection applies;
    the returned value meets the constraint with near equality.
    """
    if b <= 0.0 or vartheta <= 0.0:
        raise ValueError("need b > 0 and vartheta > 0")

    def ok(k: float) -> bool:
        return k**b <= vartheta * (1.0 - k) ** b / math.e

    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class Theorem1Report:
    eps: float
    b: float
    vartheta: float
    h0: float
    kappa: float
    log2_phi: float        # selected symbol width lower bound
    n_in: float            # inner length lower bound implied by it
    prob_e: float          # inner failure probability at that length
    prob_e_bound: float    # (kappa*eps)^b, the bound condition (ii) requires
    kappa_bound: float     # vartheta ((1-kappa) eps)^b / e
    beta_required: float   # e * prob_e, what the outer correction radius must beat
    condition_holds: bool


def theorem1_check(eps, b, vartheta, h0, prob_fn) -> Theorem1Report:
    """Walk the sufficient-condition proof chain for a concrete inner-code
    failure profile prob_fn(rate_gap, n_in) and report every inequality.

    The chain: pick kappa from (b, vartheta); give the inner code rate gap
    kappa*eps and length above 1/(kappa*eps)^h0; the condition holds when
    its failure probability drops below (kappa*eps)^b, which by the kappa
    choice is at most vartheta ((1-kappa) eps)^b / e -- i.e. the outer code
    corrects e times more than the inner decoders are expected to fail.
    """
    kappa = kappa_select(b, vartheta)
    gap = kappa * eps
    log2_phi = 1.0 / gap**h0
    n_in = log2_phi  # conservative: the true length only exceeds this
    prob_e = prob_fn(gap, n_in)
    prob_e_bound = gap**b
    kappa_bound = vartheta * ((1.0 - kappa) * eps) ** b / math.e
    holds = prob_e < prob_e_bound and prob_e_bound <= kappa_bound * (1.0 + 1e-12)
    return Theorem1Report(
        eps=eps,
        b=b,
        vartheta=vartheta,
        h0=h0,
        kappa=kappa,
        log2_phi=log2_phi,
        n_in=n_in,
        prob_e=prob_e,
        prob_e_bound=prob_e_bound,
        kappa_bound=kappa_bound,
        beta_required=math.e * prob_e,
        condition_holds=holds,
    )
