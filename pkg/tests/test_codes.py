from fractions import Fraction
from itertools import product as cartesian

import pytest

from reflect96.codes import (
    BinaryCode, BiPoly, CodeError, EnumerationLimitError, WeightEnumerator, code_report,
    doubly_even_matrix, eisenstein_e4, extended_hamming, h1_invariance, is_doubly_even,
    is_invariant_under, is_self_dual, macwilliams_matrix, modular_map, sigma3, substitute,
    theta_q, weight_enumerator,
)
from reflect96.exact import SQRT2
from reflect96.matgroup import h1


def brute_weights(code: BinaryCode) -> dict[int, int]:
    # oracle: every GF(2) combination of the generator rows as bit strings
    counts: dict[int, int] = {}
    rows = [[(r >> i) & 1 for i in range(code.n)] for r in code.rows]
    for coeffs in cartesian((0, 1), repeat=len(rows)):
        word = [sum(c * row[i] for c, row in zip(coeffs, rows)) % 2 for i in range(code.n)]
        counts[sum(word)] = counts.get(sum(word), 0) + 1
    return dict(sorted(counts.items()))


def sigma3_oracle(n: int) -> int:
    # independent divisor sum through paired divisors
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**3
            if d * d != n:
                total += (n // d) ** 3
        d += 1
    return total


E8 = extended_hamming()
REP = BinaryCode.from_strings(["11"])
ZERO1 = BinaryCode.from_strings([], n=1)


def test_e8_enumerator():
    w = weight_enumerator(E8)
    assert w.counts == {0: 1, 4: 14, 8: 1}
    assert w.counts == brute_weights(E8)
    assert str(w) == "x^8 + 14*x^4*y^4 + y^8"


def test_small_enumerators():
    assert weight_enumerator(REP).counts == {0: 1, 2: 1}
    assert str(weight_enumerator(REP)) == "x^2 + y^2"
    assert str(weight_enumerator(ZERO1)) == "x"


def test_predicates():
    assert (is_self_dual(E8), is_doubly_even(E8)) == (True, True)
    assert (is_self_dual(REP), is_doubly_even(REP)) == (True, False)
    assert not is_self_dual(ZERO1)


def test_bad_codes(tmp_path):
    with pytest.raises(CodeError):
        BinaryCode.from_strings(["1100", "0011", "1111"])
    with pytest.raises(CodeError):
        BinaryCode.from_strings(["10", "011"])
    with pytest.raises(CodeError):
        BinaryCode.from_strings(["1a"])
    f = tmp_path / "e8.txt"
    f.write_text("10000111\n01001011\n00101101\n00011110\n")
    assert BinaryCode.from_file(f) == E8


def test_enumeration_guard():
    rows = ["".join("1" if j == i else "0" for j in range(25)) for i in range(25)]
    with pytest.raises(EnumerationLimitError):
        weight_enumerator(BinaryCode.from_strings(rows))


def test_substitutions_fix_e8():
    w = weight_enumerator(E8)
    assert is_invariant_under(w, macwilliams_matrix())
    assert is_invariant_under(w, doubly_even_matrix())


def test_zero_code_not_invariant():
    w = weight_enumerator(ZERO1)
    s = 1 / SQRT2
    assert substitute(w, macwilliams_matrix()) == BiPoly({(1, 0): s, (0, 1): -s})
    assert not is_invariant_under(w, macwilliams_matrix())


def test_h1_invariance():
    g = h1().group
    assert h1_invariance(weight_enumerator(E8), g)
    assert h1_invariance(weight_enumerator(E8), g, generators_only=True)
    assert not h1_invariance(WeightEnumerator(8, {0: 1}), g)


def test_theta_series():
    t00 = theta_q(0, 9)
    assert t00.nonzero() == {0: 1, 1: 2, 4: 2, 9: 2}
    t10 = theta_q(1, 7)
    assert t10.nonzero() == {Fraction(1, 4): 2, Fraction(9, 4): 2, Fraction(25, 4): 2}
    assert t10[0] == 0


def test_modular_map_e8():
    s = modular_map(weight_enumerator(E8), 10)
    assert s.has_integer_exponents()
    coeffs = [int(c) for c in s.integer_coefficients()]
    assert coeffs[:3] == [1, 240, 2160]
    assert coeffs == [1] + [240 * sigma3_oracle(n) for n in range(1, 11)]
    assert eisenstein_e4(10) == coeffs


def test_sigma3():
    for n in range(1, 50):
        assert sigma3(n) == sigma3_oracle(n)


def test_direct_sum_squares_series():
    e16 = E8.direct_sum(E8)
    s16 = modular_map(weight_enumerator(e16), 6)
    s8 = modular_map(weight_enumerator(E8), 6)
    assert s16 == s8 * s8


def test_constant_term():
    for code in (E8, REP, ZERO1):
        assert modular_map(weight_enumerator(code), 3)[0] == 1


def test_repetition_code_has_fractional_exponents():
    s = modular_map(weight_enumerator(REP), 3)
    assert not s.has_integer_exponents()
    with pytest.raises(ArithmeticError):
        s.integer_coefficients()


def test_report():
    r = code_report(E8, h1().group)
    assert r["enumerator"] == {"0": 1, "4": 14, "8": 1}
    assert r["self_dual"] and r["doubly_even"] and r["h1_invariant"]
