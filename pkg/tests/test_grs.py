import itertools
import json

import numpy as np
import pytest

from expcodes.gf import Field, field_new
from expcodes.grs import ERASED, GrsCode


def all_codewords(code: GrsCode):
    q = code.field.q
    for msg in itertools.product(range(q), repeat=code.k):
        yield code.encode(list(msg))


def hamming(a, b):
    return sum(1 for x, y in zip(a, b) if x != y)


def nearest_codeword(code: GrsCode, word, erased=()):
    """Brute-force oracle: best codeword on the unerased coordinates."""
    keep = [j for j in range(code.delta) if j not in set(erased)]
    best, best_d = None, None
    for cw in all_codewords(code):
        d = sum(1 for j in keep if cw[j] != word[j])
        if best_d is None or d < best_d:
            best, best_d = cw, d
    return best, best_d


@pytest.fixture(scope="module")
def rs73():
    return GrsCode(field_new(3), 7, 3)


@pytest.fixture(scope="module")
def rs73_words(rs73):
    return list(all_codewords(rs73))


def test_construction_validation():
    f = field_new(3)
    with pytest.raises(ValueError):
        GrsCode(f, 9, 3)  # q < delta
    with pytest.raises(ValueError):
        GrsCode(f, 7, 0)
    with pytest.raises(ValueError):
        GrsCode(f, 7, 3, eval_points=[0, 1, 2, 3, 4, 5, 5])
    with pytest.raises(ValueError):
        GrsCode(f, 7, 3, multipliers=[0, 1, 1, 1, 1, 1, 1])


@pytest.mark.parametrize(
    "ell,delta,k",
    [(3, 7, 3), (3, 8, 2), (2, 4, 2), (3, 8, 4), (4, 6, 3)],
)
def test_mds_minimum_distance_brute_force(ell, delta, k):
    code = GrsCode(Field(ell), delta, k)
    min_wt = min(
        sum(1 for s in cw if s) for cw in all_codewords(code) if any(cw)
    )
    assert min_wt == delta - k + 1


def test_zero_message_zero_codeword(rs73):
    assert rs73.encode([0, 0, 0]) == [0] * 7
    assert rs73.encode_systematic([0, 0, 0]) == [0] * 7


def test_rate_one_code_is_pointwise_scaling():
    f = field_new(3)
    code = GrsCode(f, 8, 8)
    msg = [3, 1, 4, 1, 5, 0, 2, 6]
    word = code.encode(msg)
    from expcodes.grs import poly_eval, poly_trim

    expected = [f.mul(1, poly_eval(f, poly_trim(list(msg)), a)) for a in range(8)]
    assert word == expected
    # decoding a rate-1 code is the identity on codewords
    assert code.decode_errors(list(word)) == word


def test_systematic_positions(rs73):
    msg = [5, 2, 7]
    word = rs73.encode_systematic(msg)
    assert word[:3] == msg
    assert rs73.is_codeword(word)


def test_pairwise_distance_five(rs73_words):
    # spot-check distinct pairs (full min-weight check done above via linearity)
    rng = np.random.default_rng(4)
    for _ in range(300):
        i, j = rng.integers(0, len(rs73_words), 2)
        if i != j:
            assert hamming(rs73_words[int(i)], rs73_words[int(j)]) >= 5


def test_decode_no_errors_identity(rs73, rs73_words):
    for cw in rs73_words[::17]:
        assert rs73.decode_errors(list(cw)) == cw


def test_decode_all_weight_one_patterns_all_codewords(rs73, rs73_words):
    for cw in rs73_words:
        for pos in range(7):
            for val in range(1, 8):
                word = list(cw)
                word[pos] ^= val
                assert rs73.decode_errors(word) == cw


def test_decode_weight_two_exhaustive_patterns(rs73, rs73_words):
    # all weight-2 patterns against the zero codeword plus a codeword sample
    rng = np.random.default_rng(11)
    sample = [rs73_words[0]] + [
        rs73_words[int(i)] for i in rng.integers(0, len(rs73_words), 30)
    ]
    for cw in sample:
        for p1, p2 in itertools.combinations(range(7), 2):
            for v1 in range(1, 8):
                for v2 in range(1, 8):
                    word = list(cw)
                    word[p1] ^= v1
                    word[p2] ^= v2
                    assert rs73.decode_errors(word) == cw


def test_decode_beyond_half_distance_is_safe(rs73, rs73_words):
    # weight-3 noise: result is the brute-force nearest codeword when that
    # is within the guarantee, otherwise any codeword or a declared failure
    rng = np.random.default_rng(23)
    for _ in range(60):
        cw = rs73_words[int(rng.integers(0, len(rs73_words)))]
        word = list(cw)
        for pos in rng.choice(7, size=3, replace=False):
            word[pos] ^= int(rng.integers(1, 8))
        out = rs73.decode_errors(word)
        assert out is None or rs73.is_codeword(out)
        nearest, d = nearest_codeword(rs73, word)
        if d <= 2:
            assert out == nearest


def test_erasure_only_full_budget(rs73, rs73_words):
    rng = np.random.default_rng(5)
    for _ in range(100):
        cw = rs73_words[int(rng.integers(0, len(rs73_words)))]
        word = list(cw)
        for pos in rng.choice(7, size=4, replace=False):  # nu = d-1
            word[pos] = ERASED
        assert rs73.decode_errors_erasures(word) == cw


def test_errors_and_erasures_exhaustive_budgets(rs73, rs73_words):
    # every (theta, nu) with 2*theta + nu < 5, random placements, oracle-checked
    rng = np.random.default_rng(6)
    budgets = [(t, v) for t in range(3) for v in range(5) if 2 * t + v < 5]
    for theta, nu in budgets:
        for _ in range(40):
            cw = rs73_words[int(rng.integers(0, len(rs73_words)))]
            word = list(cw)
            positions = rng.choice(7, size=theta + nu, replace=False)
            for pos in positions[:theta]:
                word[pos] ^= int(rng.integers(1, 8))
            for pos in positions[theta:]:
                word[pos] = ERASED
            got = rs73.decode_errors_erasures(word)
            assert got == cw
            oracle, _ = nearest_codeword(
                rs73, word, erased=[j for j in range(7) if word[j] is ERASED]
            )
            assert oracle == cw


def test_all_erased_fails(rs73):
    assert rs73.decode_errors_erasures([ERASED] * 7) is None


def test_decoder_is_usable_fallback_total(rs73):
    # systematic_reencode is total and agrees with the word on info positions
    word = [1, 2, 3, 4, 5, 6, 0]
    out = rs73.systematic_reencode(word)
    assert rs73.is_codeword(out)
    assert out[:3] == word[:3]


def test_preset_roundtrip(tmp_path):
    preset = {"ell": 3, "delta": 7, "k": 3}
    path = tmp_path / "code.json"
    path.write_text(json.dumps(preset))
    code = GrsCode.from_preset_file(str(path))
    assert (code.delta, code.k, code.d) == (7, 3, 5)
    custom = GrsCode.from_preset(
        {"ell": 3, "delta": 4, "k": 2, "eval_points": [1, 3, 5, 7], "multipliers": [1, 1, 2, 2]}
    )
    assert custom.eval_points == [1, 3, 5, 7]
    cw = custom.encode([1, 2])
    assert custom.decode_errors(list(cw)) == cw
