"""Acceptance criteria 1-10, one test each.

Published values are transcribed here independently of reflect96.reference
so that a transcription slip on either side shows up as a failure.  Each
test records a PASS/FAIL line; conftest.py prints them after the run, and
running this file directly prints them too.
"""

import subprocess
import sys
from fractions import Fraction
from itertools import product as cartesian

import pytest

from reflect96.bratteli import build_diagram, count_paths, level_profile
from reflect96.centralizer import (
    closed_form, dim_character_oracle, dim_corollary, labels_at, recursion_state, theorem_sizes,
)
from reflect96.characters import (
    build_table, column_orthogonality, decompose, decompose_inner, nonzero, product,
    row_orthogonality,
)
from reflect96.codes import (
    doubly_even_matrix, extended_hamming, h1_invariance, is_doubly_even, is_invariant_under,
    is_self_dual, macwilliams_matrix, modular_map, weight_enumerator,
)
from reflect96.exact import ONE, Cyc8
from reflect96.invariants import molien_series
from reflect96.irreps import build_all, image_order
from reflect96.linalg import Matrix
from reflect96.matgroup import generate_group, generator_D, generator_T, h1

RESULTS: list[str] = []

ORDER_ROW = (1, 8, 4, 8, 2, 4, 4, 6, 4, 12, 4, 3, 4, 12, 2, 4)

TABLE = """
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
1 -1 1 -1 1 1 -1 1 -1 1 -1 1 -1 1 1 1
1 -i -1 i 1 -1 i 1 -i -1 i 1 -i -1 -1 1
1 i -1 -i 1 -1 -i 1 i -1 -i 1 i -1 -1 1
2 0 2 0 2 2 0 -1 0 -1 0 -1 0 -1 2 2
2 0 -2 0 2 -2 0 -1 0 1 0 -1 0 1 -2 2
2 0 -2i 0 -2 2i -1+i 1 1+i -i 1-i -1 -1-i i 0 0
2 0 2i 0 -2 -2i -1-i 1 1-i i 1+i -1 -1+i -i 0 0
2 0 -2i 0 -2 2i 1-i 1 -1-i -i -1+i -1 1+i i 0 0
2 0 2i 0 -2 -2i 1+i 1 -1+i i -1-i -1 1-i -i 0 0
3 1 3 1 3 3 -1 0 -1 0 -1 0 -1 0 -1 -1
3 -1 3 -1 3 3 1 0 1 0 1 0 1 0 -1 -1
3 i -3 -i 3 -3 i 0 -i 0 i 0 -i 0 1 -1
3 -i -3 i 3 -3 -i 0 i 0 -i 0 i 0 1 -1
4 0 -4i 0 -4 4i 0 -1 0 i 0 1 0 -i 0 0
4 0 4i 0 -4 -4i 0 -1 0 -i 0 1 0 i 0 0
"""

PRODUCTS = {
    1: {10: 1}, 2: {8: 1}, 3: {7: 1}, 4: {9: 1}, 5: {16: 1}, 6: {15: 1},
    7: {2: 1, 11: 1}, 8: {4: 1, 14: 1}, 9: {1: 1, 12: 1}, 10: {3: 1, 13: 1},
    11: {8: 1, 16: 1}, 12: {10: 1, 16: 1}, 13: {7: 1, 15: 1}, 14: {9: 1, 15: 1},
    15: {5: 1, 11: 1, 12: 1}, 16: {6: 1, 13: 1, 14: 1},
}

DIAGRAM = [
    {10: 1},
    {3: 1, 13: 1},
    {7: 2, 15: 1},
    {2: 2, 11: 3, 12: 1, 5: 1},
    {8: 5, 10: 1, 16: 5},
    {4: 5, 3: 1, 14: 10, 13: 6, 6: 5},
    {9: 15, 7: 7, 15: 21},
    {1: 15, 2: 7, 11: 28, 12: 36, 5: 21},
    {8: 35, 10: 51, 16: 85},
]
SQUARE_SUMS = [1, 2, 5, 15, 51, 187, 715, 2795, 11051]
IMAGE_ORDERS = [1, 2, 4, 4, 6, 12, 96, 96, 96, 96, 24, 24, 48, 48, 96, 96]

def gaussian(text: str) -> Cyc8:
    # entries look like 3, -i, 2i, -1+i, 1-i
    if not text.endswith("i"):
        return Cyc8(int(text))
    body = text[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    real, imag = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
    b = {"": 1, "+": 1, "-": -1}.get(imag)
    return Cyc8(int(real), 0, int(imag) if b is None else b, 0)


def published_table():
    return [[gaussian(t) for t in line.split()] for line in TABLE.strip().splitlines()]


def record(n: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {name}"
    if detail and not ok:
        line += f"  ({detail})"
    RESULTS.append(line)
    print(line)


def matrix_order(m: Matrix) -> int:
    e = Matrix.identity(m.rows)
    p, n = m, 1
    while p != e:
        p, n = p @ m, n + 1
    return n


def series_oracle(degrees, order):
    # count solutions of sum a_i d_i = n by brute force
    out = [0] * (order + 1)
    ranges = [range(0, order // d + 1) for d in degrees]
    for combo in cartesian(*ranges):
        s = sum(a * d for a, d in zip(combo, degrees))
        if s <= order:
            out[s] += 1
    return out


def sigma3(n: int) -> int:
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


@pytest.fixture(scope="module")
def H():
    return h1()


@pytest.fixture(scope="module")
def R(H):
    return build_all(H)


@pytest.fixture(scope="module")
def X(R, H):
    return build_table(R, H)


def test_criterion_01_group(H):
    g = generate_group([generator_T(), generator_D()])
    orders = tuple(matrix_order(g.elements[c.representative]) for c in H.classes)
    words_ok = [c.word for c in H.classes] == [
        "1", "T", "T^2", "T^3", "T^4", "T^6", "D", "DT", "DT^2", "DT^3", "DT^4", "DT^5",
        "DT^6", "DT^7", "D^2", "D^2T^2"]
    ok = len(g) == 96 and len(H.classes) == 16 and words_ok and orders == ORDER_ROW
    record(1, "closure 96, 16 classes, alignment, order row", ok, f"orders {orders}")
    assert ok


def test_criterion_02_irreps(R):
    i = Cyc8(0, 0, 1, 0)
    checks = {
        "rho13(T)": R[13].image_T == Matrix.from_rows([[1, 2, 1], [1, 0, -1], [1, -2, 1]]) * (i / 2),
        "rho13(D)": R[13].image_D == Matrix.diag([ONE, i, -ONE]),
        "rho15(T)": R[15].image_T == Matrix.from_rows([
            [1, 3, 3, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -3, 3, -1]]) * ((i - 1) / 4),
        "rho15(D)": R[15].image_D == Matrix.diag([ONE, i, -ONE, -i]),
        "rho5(T)": R[5].image_T == Matrix.from_rows([[1, 1], [3, -1]]) * Fraction(-1, 2),
        "rho5(D)": R[5].image_D == Matrix.diag([ONE, -ONE]),
    }
    norms = all(r.norm() == 1 for r in R.values())
    squares = sum(r.dim**2 for r in R.values()) == 96
    ok = all(checks.values()) and norms and squares and len(R) == 16
    bad = [k for k, v in checks.items() if not v]
    record(2, "16 irreps, six printed matrices, norms, square sum 96", ok, f"mismatched {bad}")
    assert ok


def test_criterion_03_table(X):
    pub = published_table()
    diffs = [(i + 1, k + 1) for i in range(16) for k in range(16) if X.X[i, k] != pub[i][k]]
    ok = not diffs and row_orthogonality(X) and column_orthogonality(X)
    record(3, "character table entrywise, orthogonality", ok, f"differences at {diffs[:5]}")
    assert ok


def test_criterion_04_products(X):
    chi = X.row(10)
    bad = []
    for j, want in PRODUCTS.items():
        k = product(chi, X.row(j))
        a, b = nonzero(decompose(k, X)), nonzero(decompose_inner(k, X))
        if a != want or b != want:
            bad.append(j)
    record(4, "chi10 * chi_j decompositions, both routes", not bad, f"failing j {bad}")
    assert not bad


def test_criterion_05_diagram(X):
    d = build_diagram(9, X)
    rows_ok = all(d.levels[k] == DIAGRAM[k] for k in range(9))
    sums = [level_profile(d, k).square_sum for k in range(1, 10)]
    paths_ok = all(count_paths(d, i, k) == DIAGRAM[k - 1].get(i, 0)
                   for k in range(1, 10) for i in range(1, 17))
    ok = rows_ok and sums == SQUARE_SUMS and paths_ok
    record(5, "Bratteli levels 1-9 and square sums", ok, f"square sums {sums}")
    assert ok


def test_criterion_06_dimensions(H, X):
    d = build_diagram(20, X)
    bad = []
    for k in range(1, 21):
        # element-level oracle: average of |tr g|^(2k) over all 96 matrices
        avg = sum(m.trace().abs_sq().to_fraction() ** k for m in H.group.elements) / 96
        formula = Fraction(2) ** (k - 2) + Fraction(2) ** (2 * k - 3) / 3 + Fraction(1, 3)
        values = {level_profile(d, k).square_sum, theorem_sizes(k).square_sum,
                  dim_corollary(k), dim_character_oracle(k, X), avg, formula}
        if len(values) != 1:
            bad.append(k)
        for i in labels_at(k):
            if closed_form(i, k) != d.levels[k - 1].get(i, 0):
                bad.append((k, i))
    for l in range(5):
        s = recursion_state(l)
        lev = d.levels[4 * l]
        if (s.d8, s.d10, s.d16) != (lev.get(8, 0), lev.get(10, 0), lev.get(16, 0)):
            bad.append(("recursion", l))
    record(6, "four-way dimensions, closed forms, recursion for k <= 20", not bad, f"{bad[:5]}")
    assert not bad


def test_criterion_07_molien(R):
    n = 40
    s10 = [int(c) for c in molien_series(R[10], n).coefficients]
    s5 = [int(c) for c in molien_series(R[5], n).coefficients]
    family = [molien_series(R[k], n) for k in (7, 8, 9, 10)]
    orders = [image_order(R[k]) for k in range(1, 17)]
    ok = (s10 == series_oracle([8, 12], n) and s5 == series_oracle([2, 3], n) and s10[8] == 1
          and all(f == family[0] for f in family) and orders == IMAGE_ORDERS)
    record(7, "Molien series rho10, rho5, rho7..10, image orders", ok, f"orders {orders}")
    assert ok


def test_criterion_08_codes(H):
    code = extended_hamming()
    w = weight_enumerator(code)
    # oracle: span the published generator rows over GF(2) by hand
    rows = ["10000111", "01001011", "00101101", "00011110"]
    brute: dict[int, int] = {}
    for coeffs in cartesian((0, 1), repeat=4):
        word = [sum(c * int(r[i]) for c, r in zip(coeffs, rows)) % 2 for i in range(8)]
        brute[sum(word)] = brute.get(sum(word), 0) + 1
    ok = (w.counts == {0: 1, 4: 14, 8: 1} and brute == {0: 1, 4: 14, 8: 1}
          and is_self_dual(code) and is_doubly_even(code)
          and is_invariant_under(w, macwilliams_matrix())
          and is_invariant_under(w, doubly_even_matrix())
          and h1_invariance(w, H.group))
    record(8, "e8 enumerator, self-dual, doubly even, invariance", ok)
    assert ok


def test_criterion_09_modular():
    s = modular_map(weight_enumerator(extended_hamming()), 10)
    ok = s.has_integer_exponents()
    if ok:
        got = [int(c) for c in s.integer_coefficients()]
        ok = got == [1] + [240 * sigma3(n) for n in range(1, 11)]
    record(9, "theta image of W_e8 is E4 through q^10", ok)
    assert ok


def _cli(*args: str) -> bytes:
    proc = subprocess.run([sys.executable, "-m", "reflect96.cli", *args],
                          capture_output=True, check=False)
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_criterion_10_determinism():
    runs = {
        "bratteli json": ("bratteli", "--levels", "9", "--format", "json"),
        "bratteli dot": ("bratteli", "--levels", "9", "--format", "dot"),
        "chartab": ("chartab", "--format", "csv"),
        "verify-all": ("verify-all",),
    }
    bad = [name for name, args in runs.items() if _cli(*args) != _cli(*args)]
    record(10, "byte-identical output across two CLI runs", not bad, f"differing {bad}")
    assert not bad


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
