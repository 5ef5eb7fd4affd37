"""Binary codes, weight enumerators, and the theta-series map to q-expansions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .exact import I, ONE, SQRT2, ZERO, Cyc8
from .linalg import Matrix
from .matgroup import FiniteMatrixGroup

ENUMERATION_LIMIT = 2**24


class CodeError(ValueError):
    pass


class EnumerationLimitError(RuntimeError):
    pass


def _rank_gf2(rows: Sequence[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                rank += 1
                break
            r ^= pivots[top]
    return rank


@dataclass(frozen=True)
class BinaryCode:
    n: int
    rows: tuple[int, ...]  # bit i of a row is coordinate i

    def __post_init__(self):
        if self.n < 1:
            raise CodeError("code length must be positive")
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise CodeError("generator row longer than the code length")
        if _rank_gf2(self.rows) != len(self.rows):
            raise CodeError("generator rows are linearly dependent over GF(2)")

    @classmethod
    def from_strings(cls, rows: Iterable[str], n: int | None = None) -> BinaryCode:
        rows = [r.strip() for r in rows if r.strip()]
        if not rows and n is None:
            raise CodeError("empty code needs an explicit length")
        length = n if n is not None else len(rows[0])
        vecs = []
        for r in rows:
            if len(r) != length or set(r) - {"0", "1"}:
                raise CodeError(f"bad generator row {r!r}")
            vecs.append(sum(1 << i for i, ch in enumerate(r) if ch == "1"))
        return cls(length, tuple(vecs))

    @classmethod
    def from_file(cls, path: str | Path) -> BinaryCode:
        return cls.from_strings(Path(path).read_text().splitlines())

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def codewords(self) -> list[int]:
        if 2**self.dimension > ENUMERATION_LIMIT:
            raise EnumerationLimitError(f"2^{self.dimension} codewords exceed the enumeration guard")
        words = [0]
        for r in self.rows:
            words += [w ^ r for w in words]
        return words

    def direct_sum(self, other: BinaryCode) -> BinaryCode:
        return BinaryCode(self.n + other.n, self.rows + tuple(r << self.n for r in other.rows))


def extended_hamming() -> BinaryCode:
    """The [8, 4, 4] extended Hamming code in [I_4 | A] form."""
    return BinaryCode.from_strings([
        "10000111",
        "01001011",
        "00101101",
        "00011110",
    ])


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    counts: dict[int, int]  # weight -> number of codewords

    def polynomial(self) -> BiPoly:
        return BiPoly({(self.n - w, w): Cyc8(c) for w, c in self.counts.items()})

    def __str__(self) -> str:
        terms = []
        for w, c in sorted(self.counts.items()):
            mono = "*".join(p for p in (_pow("x", self.n - w), _pow("y", w)) if p) or "1"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def _pow(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def weight_enumerator(code: BinaryCode) -> WeightEnumerator:
    counts: dict[int, int] = {}
    for w in code.codewords():
        wt = bin(w).count("1")
        counts[wt] = counts.get(wt, 0) + 1
    return WeightEnumerator(code.n, dict(sorted(counts.items())))


def is_self_dual(code: BinaryCode) -> bool:
    if 2 * code.dimension != code.n:
        return False
    return all(bin(a & b).count("1") % 2 == 0
               for a, b in combinations(code.rows, 2)) and all(
        bin(a).count("1") % 2 == 0 for a in code.rows)


def is_doubly_even(code: BinaryCode) -> bool:
    return all(bin(w).count("1") % 4 == 0 for w in code.codewords())


class BiPoly:
    """Homogeneous-or-not polynomial in x, y with Cyc8 coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Cyc8] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def linear(cls, a, b) -> BiPoly:
        return cls({(1, 0): Cyc8.coerce(a), (0, 1): Cyc8.coerce(b)})

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return BiPoly(out)

    def __mul__(self, other) -> BiPoly:
        if not isinstance(other, BiPoly):
            c = Cyc8.coerce(other)
            return BiPoly({k: v * c for k, v in self.terms.items()})
        out: dict[tuple[int, int], Cyc8] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                key = (a + c, b + d)
                out[key] = out.get(key, ZERO) + u * v
        return BiPoly(out)

    def __pow__(self, n: int) -> BiPoly:
        result = BiPoly({(0, 0): ONE})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"BiPoly({ {k: str(v) for k, v in sorted(self.terms.items())} })"


def substitute(w: WeightEnumerator, m: Matrix) -> BiPoly:
    """W(a x + b y, c x + d y) for m = [[a, b], [c, d]]."""
    if (m.rows, m.cols) != (2, 2):
        raise ValueError("substitution needs a 2x2 matrix")
    x_new = BiPoly.linear(m[0, 0], m[0, 1])
    y_new = BiPoly.linear(m[1, 0], m[1, 1])
    xp = [BiPoly({(0, 0): ONE})]
    yp = [BiPoly({(0, 0): ONE})]
    for _ in range(w.n):
        xp.append(xp[-1] * x_new)
        yp.append(yp[-1] * y_new)
    total = BiPoly()
    for wt, c in w.counts.items():
        total = total + xp[w.n - wt] * yp[wt] * c
    return total


def macwilliams_matrix() -> Matrix:
    """x -> (x - y)/sqrt2, y -> (x + y)/sqrt2."""
    s = SQRT2.inverse()
    return Matrix.from_rows([[s, -s], [s, s]])


def doubly_even_matrix() -> Matrix:
    """x -> x, y -> i y."""
    return Matrix.diag([ONE, I])


def is_invariant_under(w: WeightEnumerator, m: Matrix) -> bool:
    return substitute(w, m) == w.polynomial()


def h1_invariance(w: WeightEnumerator, group: FiniteMatrixGroup, generators_only: bool = False) -> bool:
    mats = group.generators if generators_only else group.elements
    target = w.polynomial()
    return all(substitute(w, m) == target for m in mats)


@dataclass(frozen=True)
class QuarterQSeries:
    """Series in q^(1/4): coefficients[e] multiplies q^(e/4); known for e/4 <= order."""

    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if len(self.coefficients) != 4 * self.order + 1:
            raise ValueError("coefficient count must be 4*order + 1")

    def __getitem__(self, exponent) -> Fraction:
        e = Fraction(exponent) * 4
        if e.denominator != 1:
            raise ValueError("exponents are quarter-integers")
        e = int(e)
        if e > 4 * self.order:
            raise IndexError("beyond truncation order")
        return self.coefficients[e] if e >= 0 else Fraction(0)

    def __add__(self, other: QuarterQSeries) -> QuarterQSeries:
        n = min(self.order, other.order)
        return QuarterQSeries(tuple(a + b for a, b in zip(self.coefficients[:4 * n + 1],
                                                           other.coefficients[:4 * n + 1])), n)

    def __mul__(self, other) -> QuarterQSeries:
        if not isinstance(other, QuarterQSeries):
            c = Fraction(other)
            return QuarterQSeries(tuple(a * c for a in self.coefficients), self.order)
        n = min(self.order, other.order)
        top = 4 * n
        out = [Fraction(0)] * (top + 1)
        for i, a in enumerate(self.coefficients[:top + 1]):
            if a:
                for j, b in enumerate(other.coefficients[:top + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return QuarterQSeries(tuple(out), n)

    @classmethod
    def one(cls, order: int) -> QuarterQSeries:
        return cls(tuple(Fraction(int(e == 0)) for e in range(4 * order + 1)), order)

    def __pow__(self, n: int) -> QuarterQSeries:
        result = QuarterQSeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def nonzero(self) -> dict[Fraction, Fraction]:
        return {Fraction(e, 4): c for e, c in enumerate(self.coefficients) if c}

    def has_integer_exponents(self) -> bool:
        return all(c == 0 for e, c in enumerate(self.coefficients) if e % 4)

    def integer_coefficients(self) -> list[Fraction]:
        """Coefficients of q^0..q^order; fails if a fractional exponent survives."""
        if not self.has_integer_exponents():
            raise ArithmeticError("series has fractional exponents")
        return list(self.coefficients[::4])


def theta_q(a: int, order: int) -> QuarterQSeries:
    """theta_{a0}(2 tau) as a series in q: sum over m of q^((m + a/2)^2)."""
    if a not in (0, 1):
        raise ValueError("only theta_00 and theta_10 are provided")
    if order < 1:
        raise ValueError("order must be at least 1")
    top = 4 * order
    out = [0] * (top + 1)
    m = 0
    while True:
        # 4 (m + a/2)^2 = (2m + a)^2, for m and its mirror -m - a
        e = (2 * m + a) ** 2
        if e > top:
            break
        out[e] += 1 if (a == 0 and m == 0) else 2
        m += 1
    return QuarterQSeries(tuple(Fraction(c) for c in out), order)


def modular_map(w: WeightEnumerator, order: int) -> QuarterQSeries:
    """W(theta_00(2 tau), theta_10(2 tau)) through q^order."""
    t00 = theta_q(0, order)
    t10 = theta_q(1, order)
    p00 = [QuarterQSeries.one(order)]
    p10 = [QuarterQSeries.one(order)]
    for _ in range(w.n):
        p00.append(p00[-1] * t00)
        p10.append(p10[-1] * t10)
    total = QuarterQSeries(tuple(Fraction(0) for _ in range(4 * order + 1)), order)
    for wt, c in w.counts.items():
        total = total + p00[w.n - wt] * p10[wt] * c
    return total


def sigma3(n: int) -> int:
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def eisenstein_e4(order: int) -> list[int]:
    return [1] + [240 * sigma3(n) for n in range(1, order + 1)]


def enumerator_to_json(w: WeightEnumerator) -> dict:
    return {str(k): v for k, v in w.counts.items()}


def qseries_to_json(s: QuarterQSeries) -> dict:
    if s.has_integer_exponents():
        return {str(k): str(c) for k, c in enumerate(s.integer_coefficients())}
    return {str(e): str(c) for e, c in s.nonzero().items()}


def code_report(code: BinaryCode, group: FiniteMatrixGroup | None = None) -> dict:
    w = weight_enumerator(code)
    report = {
        "n": code.n,
        "dimension": code.dimension,
        "enumerator": enumerator_to_json(w),
        "enumerator_text": str(w),
        "self_dual": is_self_dual(code),
        "doubly_even": is_doubly_even(code),
        "fixed_by_macwilliams_substitution": is_invariant_under(w, macwilliams_matrix()),
        "fixed_by_doubly_even_substitution": is_invariant_under(w, doubly_even_matrix()),
    }
    if group is not None:
        report["h1_invariant"] = h1_invariance(w, group)
    return report
