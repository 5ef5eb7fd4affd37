"""Dense exact matrices over Q(zeta_8) and polynomials in one variable t."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import ONE, ZERO, Cyc8


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


class Matrix:
    """Immutable rows x cols matrix with Cyc8 entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Cyc8.coerce(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise DimensionError(f"bad shape {rows}x{cols}")
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        if not rows:
            raise DimensionError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        n = len(values)
        return cls(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def scalar(cls, value) -> Matrix:
        return cls(1, 1, [value])

    def __getitem__(self, ij: tuple[int, int]) -> Cyc8:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Cyc8, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Cyc8, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Cyc8]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        c = Cyc8.coerce(c)
        return Matrix(self.rows, self.cols, [c * e for e in self.entries])

    __rmul__ = __mul__

    def __add__(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other * -1

    def __neg__(self) -> Matrix:
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(e.key() for e in self.entries)))
        return self._hash

    def trace(self) -> Cyc8:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def adjoint(self) -> Matrix:
        return mat_adjoint(self)

    def det(self) -> Cyc8:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        return cofactor_det(self.to_rows(), ZERO, ONE)

    def __pow__(self, n: int) -> Matrix:
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if n < 0:
            return inverse(self) ** (-n)
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"Matrix({self.rows}, {self.cols}, {[str(e) for e in self.entries]})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    bcols = [b.column(j) for j in range(b.cols)]
    for i in range(a.rows):
        arow = a.row(i)
        for col in bcols:
            acc = ZERO
            for x, y in zip(arow, col):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
    return Matrix(a.rows, b.cols, out)


def mat_adjoint(a: Matrix) -> Matrix:
    return Matrix(a.cols, a.rows, [a[i, j].conj() for j in range(a.cols) for i in range(a.rows)])


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; basis e_i (x) f_j sits at index i*dim(b) + j."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                x = a[i, j]
                for l in range(b.cols):
                    out.append(x * b[k, l])
    return Matrix(rows, cols, out)


def cofactor_det(rows: list[list], zero, one):
    """Laplace expansion along the first row; works over any commutative ring."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = zero
    for j, pivot in enumerate(rows[0]):
        if not pivot:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = pivot * cofactor_det(minor, zero, one)
        total = total - term if j % 2 else total + term
    return total


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Return X with a @ X == b.

    ``a`` must have full column rank; rows in excess are checked for
    consistency.  Pivots are the first nonzero entry in each column.
    """
    if a.rows != b.rows:
        raise DimensionError("row count mismatch in solve")
    n, m, p = a.rows, a.cols, b.cols
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(n)]
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            raise SingularMatrixError("coefficient matrix is rank deficient")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(m, n):
        if any(aug[i][m:]):
            raise InconsistentSystemError("right-hand side is outside the column space")
    return Matrix(m, p, [aug[i][m + j] for i in range(m) for j in range(p)])


def inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise DimensionError("inverse of a non-square matrix")
    return solve(a, Matrix.identity(a.rows))


def restrict(m: Matrix, basis: Matrix) -> Matrix:
    """Matrix of ``m`` on the span of the columns of ``basis``.

    Raises InconsistentSystemError when the span is not ``m``-invariant.
    """
    return solve(basis, m @ basis)


class Poly:
    """Polynomial in t with Cyc8 coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Cyc8.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Cyc8:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyc8)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x) -> Cyc8:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def charpoly_det(a: Matrix) -> Poly:
    """det(I - t*a) as a polynomial in t, by cofactor expansion."""
    if not a.is_square:
        raise DimensionError("det(I - t a) needs a square matrix")
    n = a.rows
    t = Poly.t()
    rows = [[(1 if i == j else 0) - t * a[i, j] for j in range(n)] for i in range(n)]
    return cofactor_det(rows, Poly(), Poly([1]))
