import numpy as np
import pytest

from expcodes.gf import Field, PRIMITIVE_POLYS, field_new


def schoolbook_mul(a: int, b: int, poly: int, ell: int) -> int:
    """Independent oracle: carry-less product reduced by the defining poly."""
    prod = 0
    for i in range(ell):
        if (b >> i) & 1:
            prod ^= a << i
    for bit in range(2 * ell - 2, ell - 1, -1):
        if (prod >> bit) & 1:
            prod ^= poly << (bit - ell)
    return prod & ((1 << ell) - 1)


def test_all_supported_degrees_construct():
    # table build verifies primitivity of every shipped polynomial
    for ell in range(1, 17):
        f = Field(ell)
        assert f.q == 1 << ell
        assert f.primitive_poly == PRIMITIVE_POLYS[ell]


def test_unsupported_degree_rejected():
    with pytest.raises(ValueError):
        field_new(0)
    with pytest.raises(ValueError):
        field_new(17)


def test_non_primitive_poly_rejected():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2 is reducible
    with pytest.raises(ValueError):
        Field(4, primitive_poly=0b10101)


def test_table_invariants():
    for ell in (1, 3, 4, 8):
        f = Field(ell)
        for a in range(1, f.q):
            assert f.exp_table[f.log_table[a]] == a
        for i in range(f.q):
            assert f.exp_table[i] == f.exp_table[i % (f.q - 1)]


def test_gf2_is_boolean_arithmetic():
    f = field_new(1)
    for a in (0, 1):
        for b in (0, 1):
            assert f.add(a, b) == a ^ b
            assert f.mul(a, b) == (a & b)
    assert f.inv(1) == 1


def test_gf16_known_products():
    f = field_new(4)
    assert f.mul(8, 2) == 3  # x^3 * x = x^4 = x + 1
    assert f.mul(6, 7) == schoolbook_mul(6, 7, f.primitive_poly, 4)
    assert f.pow(2, 15) == 1
    assert f.inv(1) == 1
    for a in range(1, 16):
        assert f.mul(a, f.inv(a)) == 1


def test_mul_matches_schoolbook_oracle():
    for ell in (3, 4, 8):
        f = Field(ell)
        rng = np.random.default_rng(17 + ell)
        for _ in range(2000):
            a, b = (int(x) for x in rng.integers(0, f.q, 2))
            assert f.mul(a, b) == schoolbook_mul(a, b, f.primitive_poly, ell)


def test_characteristic_two():
    for ell in (1, 4, 8):
        f = Field(ell)
        for a in range(f.q):
            assert f.add(a, a) == 0


def test_inv_zero_and_div_zero_raise():
    f = field_new(4)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(3, 0)
    assert f.div(0, 5) == 0


@pytest.mark.parametrize("ell", [3, 4, 8])
def test_field_axioms_random_triples(ell):
    f = Field(ell)
    rng = np.random.default_rng(ell)
    triples = rng.integers(0, f.q, size=(100_000, 3))
    mul, add, inv = f.mul, f.add, f.inv
    for a, b, c in triples:
        a, b, c = int(a), int(b), int(c)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        if a:
            assert mul(a, inv(a)) == 1


def test_pow_consistency():
    f = field_new(4)
    for a in range(1, f.q):
        acc = 1
        for e in range(1, 20):
            acc = f.mul(acc, a)
            assert f.pow(a, e) == acc
    assert f.pow(0, 0) == 1
    assert f.pow(0, 5) == 0
