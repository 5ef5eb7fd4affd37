"""Character table of H1 and decomposition of characters into irreducibles."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exact import ZERO, Cyc8
from .irreps import Irrep, build_all
from .linalg import Matrix, SingularMatrixError, inverse
from .matgroup import CLASS_WORDS, H1, h1


class TableConstructionError(RuntimeError):
    pass


class NotACharacterError(ValueError):
    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass
class CharacterTable:
    X: Matrix
    class_sizes: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    def row(self, label: int) -> tuple[Cyc8, ...]:
        return self.X.row(self.labels.index(label))

    def __getitem__(self, ij: tuple[int, int]) -> Cyc8:
        """1-based (label, class) lookup, matching chi_i(C_k)."""
        i, k = ij
        return self.X[self.labels.index(i), k - 1]

    @cached_property
    def inverse(self) -> Matrix:
        return inverse(self.X)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(self.X[i, 0].to_int() for i in range(self.X.rows))


def build_table(irreps: dict[int, Irrep] | None = None, h: H1 | None = None) -> CharacterTable:
    h = h or h1()
    irreps = irreps or build_all(h)
    labels = tuple(sorted(irreps))
    X = Matrix.from_rows([list(irreps[k].character) for k in labels])
    table = CharacterTable(X, h.class_sizes, labels)
    try:
        table.inverse
    except SingularMatrixError as exc:
        raise TableConstructionError("character table is singular") from exc
    return table


def inner_product(chi: Sequence[Cyc8], psi: Sequence[Cyc8], table: CharacterTable) -> Cyc8:
    total = ZERO
    for s, a, b in zip(table.class_sizes, chi, psi):
        total = total + a * b.conj() * s
    return total / table.order


def product(chi: Sequence[Cyc8], psi: Sequence[Cyc8]) -> tuple[Cyc8, ...]:
    return tuple(a * b for a, b in zip(chi, psi))


def _as_multiplicities(values: Sequence[Cyc8], labels) -> dict[int, int]:
    out = {}
    for label, v in zip(labels, values):
        if not v.is_integer() or v.to_int() < 0:
            raise NotACharacterError(
                f"coefficient of chi_{label} is {v}, not a non-negative integer",
                {lab: str(x) for lab, x in zip(labels, values)},
            )
        out[label] = v.to_int()
    return out


def decompose(k: Sequence[Cyc8], table: CharacterTable) -> dict[int, int]:
    """Multiplicities m with m X = k, by exact solution m = k X^-1."""
    row = Matrix(1, len(k), list(k))
    m = row @ table.inverse
    return _as_multiplicities(m.entries, table.labels)


def decompose_inner(k: Sequence[Cyc8], table: CharacterTable) -> dict[int, int]:
    """Same multiplicities via <k, chi_i> for each irreducible chi_i."""
    values = [inner_product(k, table.row(lab), table) for lab in table.labels]
    return _as_multiplicities(values, table.labels)


def recompose(mults: dict[int, int], table: CharacterTable) -> tuple[Cyc8, ...]:
    n = table.X.cols
    out = [ZERO] * n
    for label, m in mults.items():
        if m:
            out = [a + b * m for a, b in zip(out, table.row(label))]
    return tuple(out)


def nonzero(mults: dict[int, int]) -> dict[int, int]:
    return {k: v for k, v in mults.items() if v}


def row_orthogonality(table: CharacterTable) -> bool:
    n = table.X.rows
    for i in range(n):
        for j in range(n):
            s = inner_product(table.X.row(i), table.X.row(j), table)
            if s != (1 if i == j else 0):
                return False
    return True


def column_orthogonality(table: CharacterTable) -> bool:
    n = table.X.cols
    for k in range(n):
        for l in range(n):
            s = ZERO
            for i in range(table.X.rows):
                s = s + table.X[i, k] * table.X[i, l].conj()
            expected = Fraction(table.order, table.class_sizes[k]) if k == l else 0
            if s != expected:
                return False
    return True


def table_to_csv(table: CharacterTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["chi"] + [f"C{k + 1}" for k in range(table.X.cols)])
    w.writerow(["rep"] + list(CLASS_WORDS))
    w.writerow(["size"] + list(table.class_sizes))
    for i, label in enumerate(table.labels):
        w.writerow([f"chi{label}"] + [str(e) for e in table.X.row(i)])
    return buf.getvalue()


def table_to_json(table: CharacterTable) -> dict:
    return {
        "classes": [
            {"class": f"C{k + 1}", "word": CLASS_WORDS[k], "size": table.class_sizes[k]}
            for k in range(table.X.cols)
        ],
        "rows": {f"chi{label}": [str(e) for e in table.X.row(i)]
                 for i, label in enumerate(table.labels)},
    }


def decomposition_to_json(i: int, j: int, mults: dict[int, int]) -> dict:
    return {
        "product": [i, j],
        "multiplicities": {f"chi{k}": v for k, v in mults.items()},
        "nonzero": {f"chi{k}": v for k, v in nonzero(mults).items()},
    }
