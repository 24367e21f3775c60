"""GF(2^ell) arithmetic via log/antilog tables.

Field elements are plain Python ints in [0, q), q = 2^ell, where bit i of
the int is the coefficient of alpha^i in the polynomial basis.  Addition is
XOR; multiplication and inversion go through exp/log lookup tables built
from a fixed primitive polynomial per extension degree.
"""

from __future__ import annotations

# Primitive polynomial per extension degree, bit i = coefficient of x^i
# (bit ell included).  Every entry is verified primitive at table-build
# time: the powers of x must enumerate all q-1 nonzero elements.
PRIMITIVE_POLYS = {
    1: 0x3,        # x + 1
    2: 0x7,        # x^2 + x + 1
    3: 0xB,        # x^3 + x + 1
    4: 0x13,       # x^4 + x + 1
    5: 0x25,       # x^5 + x^2 + 1
    6: 0x43,       # x^6 + x + 1
    7: 0x89,       # x^7 + x^3 + 1
    8: 0x11D,      # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,      # x^9 + x^4 + 1
    10: 0x409,     # x^10 + x^3 + 1
    11: 0x805,     # x^11 + x^2 + 1
    12: 0x1053,    # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,    # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,    # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,    # x^15 + x + 1
    16: 0x1100B,   # x^16 + x^12 + x^3 + x + 1
}

MAX_ELL = 16


class Field:
    """GF(2^ell) with table-driven arithmetic.

    Immutable after construction and safe to share across threads.

    Parameters
    ----------
    ell : int
        Extension degree, 1 <= ell <= 16, so q = 2^ell.
    primitive_poly : int or None
        Optional override for the defining polynomial (bit i = coefficient
        of x^i, bit ell set).  Must be primitive; verified during the
        table build.
    """

    def __init__(self, ell: int, primitive_poly: int | None = None):
        if not 1 <= ell <= MAX_ELL:
            raise ValueError(f"unsupported extension degree {ell}, need 1..{MAX_ELL}")
        if primitive_poly is None:
            primitive_poly = PRIMITIVE_POLYS[ell]
        if not (primitive_poly >> ell) & 1 or primitive_poly >> (ell + 1):
            raise ValueError(f"polynomial 0b{primitive_poly:b} does not have degree {ell}")
        self.ell = ell
        self.q = 1 << ell
        self.primitive_poly = primitive_poly
        self._build_tables()

    def _build_tables(self) -> None:
        # Powers of x must hit every nonzero element exactly once; anything
        # else means the polynomial is not primitive (in particular, not
        # irreducible with x as a generator).
        q = self.q
        exp = [0] * q
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            if log[x] != -1:
                raise ValueError(
                    f"0b{self.primitive_poly:b} is not primitive over GF(2): "
                    f"x^{i} repeats element {x}"
                )
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & q:
                x ^= self.primitive_poly
        if x != 1:
            raise ValueError(f"0b{self.primitive_poly:b} is not primitive over GF(2)")
        exp[q - 1] = 1  # period q-1
        self.exp_table = exp
        self.log_table = log

    def add(self, a: int, b: int) -> int:
        """Characteristic-2 addition (= subtraction): bitwise XOR."""
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by 0")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and other.ell == self.ell
            and other.primitive_poly == self.primitive_poly
        )

    def __hash__(self) -> int:
        return hash((self.ell, self.primitive_poly))

    def __repr__(self) -> str:
        return f"Field(ell={self.ell}, poly=0x{self.primitive_poly:X})"


def field_new(ell: int) -> Field:
    """Field for GF(2^ell) with the shipped primitive polynomial."""
    return Field(ell)
