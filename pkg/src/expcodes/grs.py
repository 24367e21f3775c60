"""Generalized Reed-Solomon codes with errors-only and errors-and-erasures decoding.

A [delta, k, delta-k+1] GRS code over GF(q), q >= delta, is given by distinct
evaluation points (a_j) and nonzero column multipliers (v_j):

    codeword_j = v_j * m(a_j),   deg m < k.

Decoding uses the interpolation form of the extended-Euclid key-equation
solver: interpolate the received values, run a partial Euclidean division
against prod(x - a_j), and read the message polynomial off the stopping
remainder.  This recovers any pattern of theta errors and nu erasures with
2*theta + nu < delta - k + 1 and works for arbitrary distinct evaluation
points (the default points include 0).  O(delta^2) per decode.

Erasures are represented by None in the received word; decode failure is
reported as a None return.
"""

from __future__ import annotations

import json

from .gf import Field

# Erased-position marker inside received words.
ERASED = None

Poly = list  # coefficient list, low to high, no trailing zeros


def poly_trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_deg(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def poly_add(f: Field, p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] ^= c
    return poly_trim(out)


def poly_mul(f: Field, p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] ^= f.mul(a, b)
    return poly_trim(out)


def poly_divmod(f: Field, p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [0] * max(0, len(p) - len(q) + 1)
    inv_lead = f.inv(q[-1])
    for shift in range(len(rem) - len(q), -1, -1):
        c = f.mul(rem[shift + len(q) - 1], inv_lead)
        if c == 0:
            continue
        quo[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] ^= f.mul(c, b)
    return poly_trim(quo), poly_trim(rem)


def poly_eval(f: Field, p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = f.mul(acc, x) ^ c
    return acc


def newton_interpolate(f: Field, xs: list[int], ys: list[int]) -> Poly:
    """Unique polynomial of degree < len(xs) through (xs[i], ys[i])."""
    n = len(xs)
    dd = list(ys)  # divided differences, built in place
    for order in range(1, n):
        for i in range(n - 1, order - 1, -1):
            num = dd[i] ^ dd[i - 1]
            dd[i] = f.div(num, xs[i] ^ xs[i - order])
    poly: Poly = []
    for i in range(n - 1, -1, -1):
        poly = poly_add(f, poly_mul(f, poly, [xs[i], 1]), [dd[i]])
    return poly


class GrsCode:
    """A [delta, k] generalized Reed-Solomon code.

    Immutable after construction; decode calls allocate their own scratch
    and are reentrant.
    """

    def __init__(
        self,
        field: Field,
        delta: int,
        k: int,
        eval_points: list[int] | None = None,
        multipliers: list[int] | None = None,
    ):
        if not 1 <= k <= delta:
            raise ValueError(f"need 1 <= k <= delta, got k={k}, delta={delta}")
        if field.q < delta:
            raise ValueError(f"field size {field.q} < code length {delta}")
        if eval_points is None:
            eval_points = list(range(delta))  # first delta elements in value order
        if multipliers is None:
            multipliers = [1] * delta
        if len(eval_points) != delta or len(set(eval_points)) != delta:
            raise ValueError("eval_points must be delta distinct field elements")
        if len(multipliers) != delta or any(v == 0 for v in multipliers):
            raise ValueError("multipliers must be delta nonzero field elements")
        if any(not 0 <= a < field.q for a in eval_points + multipliers):
            raise ValueError("eval_points/multipliers outside the field")

        self.field = field
        self.delta = delta
        self.k = k
        self.eval_points = list(eval_points)
        self.multipliers = list(multipliers)
        self.d = delta - k + 1
        self.rate = k / delta
        self.rel_distance = self.d / delta

        self._gen_sys = self._systematic_generator()
        self._dual_mult = self._dual_multipliers()

    # -- construction helpers -------------------------------------------

    def _systematic_generator(self) -> list[list[int]]:
        # Row-reduce the evaluation generator so the first k columns are
        # the identity; the leading k x k minor is Vandermonde-based and
        # always invertible.
        f = self.field
        rows = [
            [f.mul(self.multipliers[j], f.pow(self.eval_points[j], i)) for j in range(self.delta)]
            for i in range(self.k)
        ]
        for col in range(self.k):
            pivot = next(r for r in range(col, self.k) if rows[r][col] != 0)
            rows[col], rows[pivot] = rows[pivot], rows[col]
            inv = f.inv(rows[col][col])
            rows[col] = [f.mul(inv, c) for c in rows[col]]
            for r in range(self.k):
                if r != col and rows[r][col] != 0:
                    c = rows[r][col]
                    rows[r] = [a ^ f.mul(c, b) for a, b in zip(rows[r], rows[col])]
        return rows

    def _dual_multipliers(self) -> list[int]:
        # u_j = (v_j * prod_{i != j} (a_j - a_i))^-1; rows u_j * a_j^i for
        # i < delta - k form a parity-check matrix of the code.
        f = self.field
        out = []
        for j in range(self.delta):
            prod = self.multipliers[j]
            aj = self.eval_points[j]
            for i in range(self.delta):
                if i != j:
                    prod = f.mul(prod, aj ^ self.eval_points[i])
            out.append(f.inv(prod))
        return out

    # -- encoding --------------------------------------------------------

    def encode(self, message: list[int]) -> list[int]:
        """Evaluation encoding: message entries are polynomial coefficients."""
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != k={self.k}")
        f = self.field
        m = poly_trim(list(message))
        return [
            f.mul(self.multipliers[j], poly_eval(f, m, self.eval_points[j]))
            for j in range(self.delta)
        ]

    def encode_systematic(self, message: list[int]) -> list[int]:
        """Codeword whose first k coordinates equal the message."""
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != k={self.k}")
        f = self.field
        word = [0] * self.delta
        for i, m in enumerate(message):
            if m == 0:
                continue
            row = self._gen_sys[i]
            for j in range(self.delta):
                if row[j]:
                    word[j] ^= f.mul(m, row[j])
        return word

    def systematic_reencode(self, word: list[int]) -> list[int]:
        """Nearest-by-convention total fallback: re-encode from the first k
        coordinates.  Used to make constituent decoders total mappings."""
        return self.encode_systematic(word[: self.k])

    # -- membership ------------------------------------------------------

    def is_codeword(self, word: list[int]) -> bool:
        if len(word) != self.delta:
            return False
        f = self.field
        for i in range(self.delta - self.k):
            s = 0
            for j in range(self.delta):
                if word[j]:
                    s ^= f.mul(word[j], f.mul(self._dual_mult[j], f.pow(self.eval_points[j], i)))
            if s != 0:
                return False
        return True

    # -- decoding --------------------------------------------------------

    def decode_errors(self, word: list[int]) -> list[int] | None:
        """Bounded-distance decoding: recovers any pattern of fewer than
        (delta-k+1)/2 errors.  Returns None on failure."""
        if len(word) != self.delta:
            raise ValueError(f"word length {len(word)} != delta={self.delta}")
        return self._decode(word, [])

    def decode_errors_erasures(self, word: list) -> list[int] | None:
        """Errors-and-erasures decoding (erasures marked ERASED/None):
        recovers theta errors and nu erasures when 2*theta + nu < d.
        Returns None on failure."""
        if len(word) != self.delta:
            raise ValueError(f"word length {len(word)} != delta={self.delta}")
        erased = [j for j, s in enumerate(word) if s is ERASED]
        return self._decode(word, erased)

    def _decode(self, word: list, erased: list[int]) -> list[int] | None:
        f = self.field
        keep = [j for j in range(self.delta) if word[j] is not ERASED]
        if len(keep) < self.k:
            return None  # underdetermined
        xs = [self.eval_points[j] for j in keep]
        ys = [f.div(word[j], self.multipliers[j]) for j in keep]

        g0: Poly = [1]
        for x in xs:
            g0 = poly_mul(f, g0, [x, 1])
        g1 = poly_trim(newton_interpolate(f, xs, ys))

        # Partial extended Euclid on (g0, g1), tracking the g1 cofactor;
        # stop at the first remainder of degree < (|keep| + k) / 2.
        r_prev, r_cur = g0, g1
        v_prev: Poly = []
        v_cur: Poly = [1]
        bound = len(keep) + self.k
        while 2 * poly_deg(r_cur) >= bound:
            quo, rem = poly_divmod(f, r_prev, r_cur)
            r_prev, r_cur = r_cur, rem
            v_prev, v_cur = v_cur, poly_add(f, v_prev, poly_mul(f, quo, v_cur))
        if not v_cur:
            return None
        msg_poly, rem = poly_divmod(f, r_cur, v_cur)
        if rem or poly_deg(msg_poly) >= self.k:
            return None
        return [
            f.mul(self.multipliers[j], poly_eval(f, msg_poly, self.eval_points[j]))
            for j in range(self.delta)
        ]

    # -- presets ---------------------------------------------------------

    @classmethod
    def from_preset(cls, preset: dict) -> "GrsCode":
        """Build from a JSON-style preset:
        {"ell": .., "delta": .., "k": .., "eval_points": [..]?, "multipliers": [..]?}
        """
        field = Field(int(preset["ell"]))
        return cls(
            field,
            int(preset["delta"]),
            int(preset["k"]),
            preset.get("eval_points"),
            preset.get("multipliers"),
        )

    @classmethod
    def from_preset_file(cls, path: str) -> "GrsCode":
        with open(path) as fh:
            return cls.from_preset(json.load(fh))

    def __repr__(self) -> str:
        return f"GrsCode([{self.delta},{self.k},{self.d}] over GF({self.field.q}))"
