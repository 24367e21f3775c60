"""Nearly-MDS expander codes on regular bipartite graphs, with the iterative
two-sided decoder and its parameter/iteration bounds.

The code lives on the N = delta*n edges of a delta-regular bipartite graph:
a word is a codeword when every left vertex sees a codeword of the left GRS
constituent on its (ordered) incident edges and every right vertex sees one
of the right constituent.  Folding each left vertex's edge block through the
systematic constituent encoder yields the derived code over the big alphabet
Phi = F^{k_a}, one Phi symbol per left vertex, represented here as packed
ints of phi_bits = k_a * ell bits.

The decoder alternates full-side applications of the constituent decoders
(right side on odd sweeps, consuming erasures; left side on even sweeps,
errors only) and declares an error unless the final edge word satisfies all
2n local constraints.  With measured gamma it corrects mu errors and rho
erasures whenever mu + rho/2 < beta*n, beta from the closed-form bound below.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .gfla import null_space_basis
from .graphs import BipartiteGraph, spectral
from .grs import ERASED, GrsCode


def distance_bound(gamma: float, delta_a: float, delta_b: float) -> float:
    """Lower bound on the relative distance of the folded code.

    May be <= 0 (vacuous) when gamma is large relative to the constituent
    distances.
    """
    return (delta_b - gamma * math.sqrt(delta_b / delta_a)) / (1.0 - gamma)


def beta_bound(gamma: float, delta_a: float, delta_b: float) -> float:
    """Guaranteed correctable fraction beta (erasures counted half)."""
    return (delta_b / 2.0 - gamma * math.sqrt(delta_b / delta_a)) / (1.0 - gamma)


def iteration_bound(
    delta: int,
    beta: float,
    sigma: float,
    gamma: float,
    delta_a: float,
    delta_b: float,
    sigma_unit: str = "fraction",
    n: int | None = None,
) -> float:
    """Upper bound omega on decoder sweeps; total constituent-decoder
    applications are at most omega * n.

    sigma is the actual error level in the received word.  sigma_unit
    chooses between the two readings of that quantity: "fraction" (of n,
    the default) or "count" (absolute, converted via n).
    """
    if sigma_unit == "count":
        if n is None:
            raise ValueError('sigma_unit="count" requires n')
        sigma = sigma / n
    elif sigma_unit != "fraction":
        raise ValueError(f"unknown sigma_unit {sigma_unit!r}")
    if not 0.0 < sigma < beta:
        raise ValueError(f"need 0 < sigma < beta, got sigma={sigma}, beta={beta}")
    contraction = 4.0 * gamma * gamma / (delta_a * delta_b)
    if contraction >= 1.0:
        raise ValueError(f"need 4*gamma^2 < delta_a*delta_b, got ratio {contraction}")
    if gamma == 0.0:
        first = 0.0  # log denominator diverges
    else:
        ratio = math.log(delta * beta * math.sqrt(sigma) / (beta - sigma)) / math.log(
            1.0 / contraction
        )
        first = 2.0 * max(0.0, math.ceil(ratio))
    second = (1.0 + delta_a / delta_b) / (1.0 - contraction**2)
    return first + second


@dataclass(frozen=True)
class SelectedParams:
    """Rate/distance/degree selection guaranteeing beta > epsilon/8."""

    delta_min: int
    r: float          # constituent rate, both sides
    delta_rel: float  # constituent relative distance, both sides
    vartheta: float = 0.125


def select_params(epsilon: float) -> SelectedParams:
    """Smallest admissible degree for target rate gap epsilon.

    Any degree above (16/epsilon)^2 makes beta > epsilon/8 whenever
    gamma <= 2/sqrt(delta); the field-degree cap ell <= 16 bounds the
    supported degree at 2^16.
    """
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0,1), got {epsilon}")
    delta_min = math.floor((16.0 / epsilon) ** 2) + 1
    if delta_min > 1 << 16:
        raise ValueError(
            f"epsilon={epsilon} needs degree {delta_min} > 2^16; supported fields "
            "cap the degree at 65536 (epsilon must exceed roughly 1/16)"
        )
    return SelectedParams(delta_min, 1.0 - epsilon / 2.0, epsilon / 2.0)


@dataclass
class DecodeTrace:
    """Accounting for one decoder run (feeds the complexity probes)."""

    iterations_used: int = 0
    calls_a: int = 0
    calls_b: int = 0
    success: bool = False
    delta: int = 0

    @property
    def decoder_calls(self) -> int:
        return self.calls_a + self.calls_b

    @property
    def ops(self) -> int:
        # cost model: one constituent decode = delta^2 field operations
        return self.decoder_calls * self.delta * self.delta

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "iterations_used": self.iterations_used,
                "calls_a": self.calls_a,
                "calls_b": self.calls_b,
                "decoder_calls": self.decoder_calls,
                "ops": self.ops,
                "success": self.success,
            }
        )


class ExpanderCode:
    """The edge code of (graph, code_a, code_b), folded over Phi = F^{k_a}.

    Immutable after construction; decoding is reentrant.  The generator
    basis is computed on first use (elimination over F, O(N^3)).
    """

    def __init__(self, graph: BipartiteGraph, code_a: GrsCode, code_b: GrsCode):
        if code_a.delta != graph.delta or code_b.delta != graph.delta:
            raise ValueError("constituent code lengths must equal the graph degree")
        if code_a.field != code_b.field:
            raise ValueError("constituent codes must share one field")
        if code_a.field.q < graph.delta:
            raise ValueError("field size must be >= graph degree")
        self.graph = graph
        self.code_a = code_a
        self.code_b = code_b
        self.field = code_a.field
        self.n = graph.n
        self.delta = graph.delta
        self.num_edges = graph.num_edges
        self.phi_bits = code_a.k * self.field.ell

        self.spectral_info = spectral(graph)
        self.gamma = self.spectral_info.gamma
        self.rate_bound = max(0.0, code_a.rate + code_b.rate - 1.0)
        self.distance_bound = distance_bound(
            self.gamma, code_a.rel_distance, code_b.rel_distance
        )
        self.beta = beta_bound(self.gamma, code_a.rel_distance, code_b.rel_distance)
        self.decode_iterations: int | None = None  # preset override for m
        self._basis: list[list[int]] | None = None

    # -- generator basis ---------------------------------------------------

    def _parity_rows(self) -> list[list[int]]:
        rows = []
        for side_inc, code in (
            (self.graph.incidence_a, self.code_a),
            (self.graph.incidence_b, self.code_b),
        ):
            dual = code._dual_mult
            pts = code.eval_points
            f = self.field
            for inc in side_inc:
                for i in range(code.delta - code.k):
                    row = [0] * self.num_edges
                    for pos, e in enumerate(inc):
                        row[e] = f.mul(dual[pos], f.pow(pts[pos], i))
                    rows.append(row)
        return rows

    @property
    def generator_basis(self) -> list[list[int]]:
        if self._basis is None:
            self._basis = null_space_basis(
                self.field, self._parity_rows(), self.num_edges
            )
        return self._basis

    @property
    def dimension(self) -> int:
        return len(self.generator_basis)

    @property
    def rate_actual(self) -> float:
        return self.dimension / self.num_edges

    @property
    def message_len(self) -> int:
        return self.dimension

    # -- membership and folding --------------------------------------------

    def contains(self, edge_word: list) -> bool:
        """All 2n local constraints hold (erasures never qualify)."""
        if len(edge_word) != self.num_edges or any(s is ERASED for s in edge_word):
            return False
        for inc, code in (
            (self.graph.incidence_a, self.code_a),
            (self.graph.incidence_b, self.code_b),
        ):
            for edges in inc:
                if not code.is_codeword([edge_word[e] for e in edges]):
                    return False
        return True

    def _pack(self, elements: list[int]) -> int:
        sym = 0
        for i, x in enumerate(elements):
            sym |= x << (i * self.field.ell)
        return sym

    def _unpack(self, sym: int) -> list[int]:
        mask = self.field.q - 1
        return [(sym >> (i * self.field.ell)) & mask for i in range(self.code_a.k)]

    def map_symbol(self, sym: int) -> list[int]:
        """Linear bijection Phi -> C_A (systematic constituent encoding)."""
        return self.code_a.encode_systematic(self._unpack(sym))

    def unmap_local(self, local: list[int]) -> int:
        return self._pack(local[: self.code_a.k])

    def psi(self, edge_word: list[int]) -> list[int]:
        """Fold a codeword to its length-n word over Phi."""
        if not self.contains(edge_word):
            raise ValueError("psi is only defined on codewords")
        return [
            self.unmap_local([edge_word[e] for e in self.graph.incidence_a[u]])
            for u in range(self.n)
        ]

    def psi_inv(self, phi_word: list) -> list:
        """Unfold a Phi word to the edge domain; an erased symbol erases all
        of its vertex's edge coordinates."""
        if len(phi_word) != self.n:
            raise ValueError(f"expected {self.n} symbols, got {len(phi_word)}")
        z: list = [ERASED] * self.num_edges
        for u, sym in enumerate(phi_word):
            if sym is ERASED:
                continue
            local = self.map_symbol(sym)
            for pos, e in enumerate(self.graph.incidence_a[u]):
                z[e] = local[pos]
        return z

    # -- encoding ------------------------------------------------------------

    def encode_edge_word(self, message: list[int]) -> list[int]:
        basis = self.generator_basis
        if len(message) != len(basis):
            raise ValueError(f"message length {len(message)} != dimension {len(basis)}")
        f = self.field
        word = [0] * self.num_edges
        for m, vec in zip(message, basis):
            if m == 0:
                continue
            for j, x in enumerate(vec):
                if x:
                    word[j] ^= f.mul(m, x)
        return word

    def encode_message(self, message: list[int]) -> list[int]:
        return self.psi(self.encode_edge_word(message))

    def random_message(self, rng) -> list[int]:
        return [int(x) for x in rng.integers(0, self.field.q, self.dimension)]

    # -- decoding ------------------------------------------------------------

    def default_iterations(self) -> int:
        """max of the sweep bound at sigma = beta/2 and 4*log2(n)."""
        floor_m = math.ceil(4 * math.log2(max(self.n, 2)))
        if self.beta <= 0:
            return floor_m
        omega = iteration_bound(
            self.delta,
            self.beta,
            self.beta / 2.0,
            self.gamma,
            self.code_a.rel_distance,
            self.code_b.rel_distance,
        )
        return max(math.ceil(omega), floor_m)

    def _total_decode_a(self, local: list[int]) -> list[int]:
        out = self.code_a.decode_errors(local)
        if out is None:
            out = self.code_a.systematic_reencode(local)
        return out

    def _total_decode_b(self, local: list) -> list[int]:
        out = self.code_b.decode_errors_erasures(local)
        if out is None:
            out = self.code_b.systematic_reencode([0 if s is ERASED else s for s in local])
        return out

    def decode(
        self, phi_word: list, m: int | None = None, early_stop: bool = True
    ) -> tuple[list[int] | None, DecodeTrace]:
        """Iterative decoding of a received Phi word (ints or ERASED).

        Returns (codeword symbols, trace) on success and (None, trace) when
        the final edge word violates some local constraint.  Sweeps are
        side-synchronous; within a sweep the per-vertex decodes are
        independent.  early_stop=False forces all m sweeps (deterministic
        operation counts for the complexity probes).
        """
        if m is None:
            m = self.decode_iterations or self.default_iterations()
        if m < 1:
            raise ValueError("need at least one sweep")
        trace = DecodeTrace(delta=self.delta)
        z = self.psi_inv(phi_word)
        prev_changed = True
        for i in range(1, m + 1):
            on_b = i % 2 == 1  # odd sweeps decode the right side first
            inc = self.graph.incidence_b if on_b else self.graph.incidence_a
            changed = False
            for edges in inc:
                local = [z[e] for e in edges]
                if on_b:
                    out = self._total_decode_b(local)
                    trace.calls_b += 1
                else:
                    out = self._total_decode_a(local)
                    trace.calls_a += 1
                if out != local:
                    changed = True
                    for pos, e in enumerate(edges):
                        z[e] = out[pos]
            trace.iterations_used = i
            if early_stop and not changed and not prev_changed:
                break
            prev_changed = changed
        if self.contains(z):
            trace.success = True
            return self.psi(z), trace
        return None, trace

    def __repr__(self) -> str:
        return (
            f"ExpanderCode(n={self.n}, delta={self.delta}, "
            f"A={self.code_a!r}, B={self.code_b!r})"
        )
